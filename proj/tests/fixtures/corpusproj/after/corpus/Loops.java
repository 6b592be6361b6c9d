package corpus;

public final class Loops {
    private Loops() {
    }

    public static int[] fill(int n, int v) {
        int[] out = new int[n];
        for (int k = 0; k < n; k++) {
            out[k] = v;
        }
        return out;
    }

    public static int[] reverse(int[] xs) {
        int[] out = new int[xs.length];
        int last = xs.length - 1;
        for (int k = 0; k < xs.length; k++) {
            out[last - k] = xs[k];
        }
        return out;
    }

    public static int countAbove(int[] xs, int limit) {
        int count = 0;
        for (int x : xs) {
            if (x > limit) {
                count++;
            }
        }
        return count;
    }

    public static int firstIndexOf(int[] xs, int target) {
        int index = -1;
        for (int k = 0; k < xs.length; k++) {
            if (xs[k] == target) {
                return k;
            }
        }
        return index;
    }

    public static int sumArray(int[] xs) {
        int total = 0;
        for (int x : xs) {
            total += x;
        }
        return total;
    }

    public static int countMatches(String[] words, String target) {
        int n = 0;
        for (String word : words) {
            if (word.equals(target)) {
                n++;
            }
        }
        return n;
    }

    public static int smallest(int[] xs) {
        int best = Integer.MAX_VALUE;
        for (int x : xs) {
            best = Math.min(best, x);
        }
        return best;
    }

    public static boolean anyZero(int[] xs) {
        for (int x : xs) {
            if (x == 0) {
                return true;
            }
        }
        return false;
    }

    public static int scaled(int[] xs, int factor) {
        int total = 0;
        for (int x : xs) {
            total += x * factor;
        }
        return total;
    }
}
