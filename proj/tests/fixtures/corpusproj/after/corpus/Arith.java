package corpus;

public final class Arith {
    private Arith() {
    }

    public static int combine0(int a, int b) {
        int result = a + b;
        return result;
    }

    public static int combine1(int a, int b) {
        int result = a * b;
        return result;
    }

    public static int combine2(int a, int b) {
        int result = a - b;
        return result;
    }

    public static int combine3(int a, int b) {
        int result = a % b;
        return result;
    }

    public static int clampLow(int v, int low) {
        if (v < low) {
            v = low;
        }
        return v;
    }

    public static int sumTo(int n) {
        int total = 0;
        for (int k = 1; k <= n; k++) {
            total += k;
        }
        return total;
    }

    public static int absolute(int v) {
        if (v < 0) {
            return -v;
        }
        return v;
    }

    public static int maxOf(int[] xs) {
        int best = xs[0];
        for (int x : xs) {
            if (x > best) {
                best = x;
            }
        }
        return best;
    }

    public static long power(long base, int exp) {
        long acc = 1;
        for (int k = 0; k < exp; k++) {
            acc *= base;
        }
        return acc;
    }

    public static int direct0(int a, int b) {
        return a + b;
    }

    public static int direct1(int a, int b) {
        return a * b - 1;
    }

    public static int direct2(int a, int b) {
        return (a + b) / 2;
    }

    public static int direct3(int a, int b) {
        return a > b ? a : b;
    }

    public static double average(int[] xs) {
        double sum = 0;
        for (int x : xs) {
            sum += x;
        }
        return xs.length == 0 ? 0 : sum / xs.length;
    }

    public static long product(int[] xs) {
        long acc = 1;
        for (int x : xs) {
            acc *= x;
        }
        return acc;
    }

    public static int sign(int v) {
        int result = v < 0 ? -1 : 1;
        return result;
    }

    public static int half(int v) {
        int quarter = v * 2 / 4;
        return quarter;
    }
}
