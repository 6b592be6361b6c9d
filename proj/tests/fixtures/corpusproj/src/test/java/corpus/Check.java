package corpus;

public final class Check {
    private Check() {
    }

    public static void equal(Object expected, Object actual) {
        if (expected == null ? actual != null : !expected.equals(actual)) {
            throw new AssertionError("expected <" + expected + "> but was <" + actual + ">");
        }
    }

    public static void equal(long expected, long actual) {
        equal(Long.valueOf(expected), Long.valueOf(actual));
    }

    public static void equal(double expected, double actual) {
        equal(Double.valueOf(expected), Double.valueOf(actual));
    }

    public static void equal(boolean expected, boolean actual) {
        equal(Boolean.valueOf(expected), Boolean.valueOf(actual));
    }

    public static void equal(char expected, char actual) {
        equal(Character.valueOf(expected), Character.valueOf(actual));
    }
}
