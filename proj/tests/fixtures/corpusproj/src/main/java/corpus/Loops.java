package corpus;

public final class Loops {
    private Loops() {
    }

    public static int[] fill(int n, int v) {
        int[] out = new int[n];
        for (int k = 0; k < n; k++) {
            out[k] = v;
            continue;
        }
        return out;
    }

    public static int[] reverse(int[] xs) {
        int[] out = new int[xs.length];
        int last = xs.length - 1;
        int swaps = 0;
        for (int k = 0; k < xs.length; k++) {
            out[last - k] = xs[k];
            swaps++;
        }
        return out;
    }

    public static int countAbove(int[] xs, int limit) {
        int count = 0;
        int seen = xs.length;
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
        index = -1;
        return index;
    }

    public static int sumArray(int[] xs) {
        int total = 0;
        for (int i = 0; i < xs.length; i++) {
            total += xs[i];
        }
        return total;
    }

    public static int countMatches(String[] words, String target) {
        int n = 0;
        for (int i = 0; i < words.length; i++) {
            if (words[i].equals(target)) {
                n++;
            }
        }
        return n;
    }

    public static int smallest(int[] xs) {
        int best = Integer.MAX_VALUE;
        for (int x : xs) {
            if (x < best) {
                best = x;
            }
        }
        return best;
    }

    public static boolean anyZero(int[] xs) {
        for (int i = 0; i < xs.length; i++) {
            if (xs[i] == 0) {
                return true;
            }
        }
        return false;
    }

    public static int scaled(int[] xs, int factor) {
        int total = 0;
        for (int x : xs) {
            int step = x * factor;
            total += step;
        }
        return total;
    }
}
