package corpus;

public final class Arith {
    private Arith() {
    }

    public static int combine0(int a, int b) {
        int unused = a * 2;
        int result = a + b;
        return result;
    }

    public static int combine1(int a, int b) {
        int unused = a * 3;
        int result = a * b;
        return result;
    }

    public static int combine2(int a, int b) {
        int unused = a * 4;
        int result = a - b;
        return result;
    }

    public static int combine3(int a, int b) {
        int unused = a * 5;
        int result = a % b;
        return result;
    }

    public static int clampLow(int v, int low) {
        int steps = 0;
        if (v < low) {
            v = low;
        }
        steps++;
        return v;
    }

    public static int sumTo(int n) {
        int total = 0;
        int iterations = 0;
        for (int k = 1; k <= n; k++) {
            total += k;
            iterations++;
        }
        return total;
    }

    public static int absolute(int v) {
        if (false) {
            System.out.println("negative input " + v);
        }
        if (v < 0) {
            return -v;
        }
        return v;
    }

    public static int maxOf(int[] xs) {
        int best = xs[0];
        best = best;
        for (int x : xs) {
            if (x > best) {
                best = x;
            }
        }
        return best;
    }

    public static long power(long base, int exp) {
        long acc = 1;
        acc = 1;
        for (int k = 0; k < exp; k++) {
            acc *= base;
        }
        return acc;
    }

    public static int direct0(int a, int b) {
        int value = a + b;
        return value;
    }

    public static int direct1(int a, int b) {
        int value = a * b - 1;
        return value;
    }

    public static int direct2(int a, int b) {
        int value = (a + b) / 2;
        return value;
    }

    public static int direct3(int a, int b) {
        int value = a > b ? a : b;
        return value;
    }

    public static double average(int[] xs) {
        double sum = 0;
        for (int i = 0; i < xs.length; i++) {
            sum += xs[i];
        }
        return xs.length == 0 ? 0 : sum / xs.length;
    }

    public static long product(int[] xs) {
        long acc = 1;
        for (int i = 0; i < xs.length; i++) {
            acc *= xs[i];
        }
        return acc;
    }

    public static int sign(int v) {
        int result;
        if (v < 0) {
            result = -1;
        } else {
            result = 1;
        }
        return result;
    }

    public static int half(int v) {
        int doubled = v * 2;
        int quarter = doubled / 4;
        return quarter;
    }
}
