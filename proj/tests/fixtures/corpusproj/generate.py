#!/usr/bin/env python3
"""Regenerates the corpus fixture project: sources, tests, after-files and pairs.jsonl."""
import json
import os
import shutil
import textwrap

HERE = os.path.dirname(os.path.abspath(__file__))
PKG = "corpus"

PAIRS = []


def pair(cls, name, kind, original, simplified, tests, broken=None):
    PAIRS.append(dict(cls=cls, name=name, kind=kind, original=textwrap.dedent(original).strip("\n") + "\n",
                      simplified=textwrap.dedent(simplified).strip("\n") + "\n", tests=tests,
                      broken=(textwrap.dedent(broken).strip("\n") + "\n") if broken else None))


def eq(expected, call):
    return "Check.equal(%s, %s);" % (expected, call)


# ---- deletions ---------------------------------------------------------------

for i, (op, a, b, want) in enumerate([("+", 2, 3, 5), ("*", 4, 5, 20), ("-", 9, 4, 5), ("%", 17, 5, 2)]):
    pair("Arith", "combine%d" % i, "deletion",
         f"""
         public static int combine{i}(int a, int b) {{
             int unused = a * {i + 2};
             int result = a {op} b;
             return result;
         }}
         """,
         f"""
         public static int combine{i}(int a, int b) {{
             int result = a {op} b;
             return result;
         }}
         """,
         [eq(want, f"Arith.combine{i}({a}, {b})"), eq(f"0 {op} 1" if op != "%" else "0", f"Arith.combine{i}(0, 1)")],
         broken=f"""
         public static int combine{i}(int a, int b) {{
             int result = a {op} a;
             return result;
         }}
         """ if i == 0 else None)

pair("Arith", "clampLow", "deletion", """
    public static int clampLow(int v, int low) {
        int steps = 0;
        if (v < low) {
            v = low;
        }
        steps++;
        return v;
    }
    """, """
    public static int clampLow(int v, int low) {
        if (v < low) {
            v = low;
        }
        return v;
    }
    """, [eq(3, "Arith.clampLow(1, 3)"), eq(7, "Arith.clampLow(7, 3)")])

pair("Arith", "sumTo", "deletion", """
    public static int sumTo(int n) {
        int total = 0;
        int iterations = 0;
        for (int k = 1; k <= n; k++) {
            total += k;
            iterations++;
        }
        return total;
    }
    """, """
    public static int sumTo(int n) {
        int total = 0;
        for (int k = 1; k <= n; k++) {
            total += k;
        }
        return total;
    }
    """, [eq(15, "Arith.sumTo(5)"), eq(0, "Arith.sumTo(0)")],
    broken="""
    public static int sumTo(int n) {
        int total = 0;
        for (int k = 1; k < n; k++) {
            total += k;
        }
        return total;
    }
    """)

pair("Arith", "absolute", "deletion", """
    public static int absolute(int v) {
        if (false) {
            System.out.println("negative input " + v);
        }
        if (v < 0) {
            return -v;
        }
        return v;
    }
    """, """
    public static int absolute(int v) {
        if (v < 0) {
            return -v;
        }
        return v;
    }
    """, [eq(4, "Arith.absolute(-4)"), eq(6, "Arith.absolute(6)")])

pair("Arith", "maxOf", "deletion", """
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
    """, """
    public static int maxOf(int[] xs) {
        int best = xs[0];
        for (int x : xs) {
            if (x > best) {
                best = x;
            }
        }
        return best;
    }
    """, [eq(9, "Arith.maxOf(new int[] {3, 9, 2})"), eq(-1, "Arith.maxOf(new int[] {-1})")])

pair("Arith", "power", "deletion", """
    public static long power(long base, int exp) {
        long acc = 1;
        acc = 1;
        for (int k = 0; k < exp; k++) {
            acc *= base;
        }
        return acc;
    }
    """, """
    public static long power(long base, int exp) {
        long acc = 1;
        for (int k = 0; k < exp; k++) {
            acc *= base;
        }
        return acc;
    }
    """, [eq("8L", "Arith.power(2, 3)"), eq("1L", "Arith.power(5, 0)")])

pair("Texts", "initials", "deletion", """
    public static String initials(String[] words) {
        StringBuilder out = new StringBuilder();
        StringBuilder scratch = new StringBuilder();
        for (String w : words) {
            if (w.length() > 0) {
                out.append(w.charAt(0));
            }
        }
        return out.toString();
    }
    """, """
    public static String initials(String[] words) {
        StringBuilder out = new StringBuilder();
        for (String w : words) {
            if (w.length() > 0) {
                out.append(w.charAt(0));
            }
        }
        return out.toString();
    }
    """, [eq('"ab"', 'Texts.initials(new String[] {"alpha", "", "beta"})')],
    broken="""
    public static String initials(String[] words) {
        StringBuilder out = new StringBuilder();
        for (String w : words) {
            out.append(w.charAt(0));
        }
        return out.toString();
    }
    """)

pair("Texts", "lengthOrZero", "deletion", """
    public static int lengthOrZero(String s) {
        if (s == null) {
            return 0;
        }
        if (s == null) {
            return 0;
        }
        return s.length();
    }
    """, """
    public static int lengthOrZero(String s) {
        if (s == null) {
            return 0;
        }
        return s.length();
    }
    """, [eq(0, "Texts.lengthOrZero(null)"), eq(3, 'Texts.lengthOrZero("abc")')])

pair("Texts", "countVowels", "deletion", """
    public static int countVowels(String s) {
        int count = 0;
        String lower = s.toLowerCase();
        int length = lower.length();
        for (int k = 0; k < lower.length(); k++) {
            char c = lower.charAt(k);
            if ("aeiou".indexOf(c) >= 0) {
                count++;
            } else {
                continue;
            }
        }
        return count;
    }
    """, """
    public static int countVowels(String s) {
        int count = 0;
        String lower = s.toLowerCase();
        for (int k = 0; k < lower.length(); k++) {
            char c = lower.charAt(k);
            if ("aeiou".indexOf(c) >= 0) {
                count++;
            }
        }
        return count;
    }
    """, [eq(3, 'Texts.countVowels("EducAtx")'), eq(0, 'Texts.countVowels("xyz")')])

pair("Texts", "joinWith", "deletion", """
    public static String joinWith(String[] parts, String sep) {
        StringBuilder out = new StringBuilder();
        String previous = null;
        for (int k = 0; k < parts.length; k++) {
            if (k > 0) {
                out.append(sep);
            }
            out.append(parts[k]);
            previous = parts[k];
        }
        return out.toString();
    }
    """, """
    public static String joinWith(String[] parts, String sep) {
        StringBuilder out = new StringBuilder();
        for (int k = 0; k < parts.length; k++) {
            if (k > 0) {
                out.append(sep);
            }
            out.append(parts[k]);
        }
        return out.toString();
    }
    """, [eq('"a-b-c"', 'Texts.joinWith(new String[] {"a", "b", "c"}, "-")'), eq('""', 'Texts.joinWith(new String[0], ",")')])

pair("Texts", "shout", "deletion", """
    public static String shout(String s) {
        String trimmed = s.trim();
        String upper = trimmed.toUpperCase();
        String unusedCopy = new String(upper);
        return upper + "!";
    }
    """, """
    public static String shout(String s) {
        String trimmed = s.trim();
        String upper = trimmed.toUpperCase();
        return upper + "!";
    }
    """, [eq('"HI!"', 'Texts.shout(" hi ")')])

pair("Flags", "anyNegative", "deletion", """
    public static boolean anyNegative(int[] xs) {
        boolean found = false;
        for (int x : xs) {
            if (x < 0) {
                found = true;
                break;
            }
        }
        found = found;
        return found;
    }
    """, """
    public static boolean anyNegative(int[] xs) {
        boolean found = false;
        for (int x : xs) {
            if (x < 0) {
                found = true;
                break;
            }
        }
        return found;
    }
    """, [eq(True, "Flags.anyNegative(new int[] {1, -2})"), eq(False, "Flags.anyNegative(new int[] {1, 2})")])

pair("Flags", "allEven", "deletion", """
    public static boolean allEven(int[] xs) {
        int checked = 0;
        for (int x : xs) {
            checked++;
            if (x % 2 != 0) {
                return false;
            }
        }
        return true;
    }
    """, """
    public static boolean allEven(int[] xs) {
        for (int x : xs) {
            if (x % 2 != 0) {
                return false;
            }
        }
        return true;
    }
    """, [eq(True, "Flags.allEven(new int[] {2, 4})"), eq(False, "Flags.allEven(new int[] {2, 3})")],
    broken="""
    public static boolean allEven(int[] xs) {
        for (int x : xs) {
            return x % 2 == 0;
        }
        return true;
    }
    """)

pair("Flags", "inRange", "deletion", """
    public static boolean inRange(int v, int lo, int hi) {
        if (false) {
            return true;
        }
        boolean ok = v >= lo && v <= hi;
        return ok;
    }
    """, """
    public static boolean inRange(int v, int lo, int hi) {
        boolean ok = v >= lo && v <= hi;
        return ok;
    }
    """, [eq(True, "Flags.inRange(3, 1, 5)"), eq(False, "Flags.inRange(9, 1, 5)")])

pair("Loops", "fill", "deletion", """
    public static int[] fill(int n, int v) {
        int[] out = new int[n];
        for (int k = 0; k < n; k++) {
            out[k] = v;
            continue;
        }
        return out;
    }
    """, """
    public static int[] fill(int n, int v) {
        int[] out = new int[n];
        for (int k = 0; k < n; k++) {
            out[k] = v;
        }
        return out;
    }
    """, [eq(3, "Loops.fill(3, 7).length"), eq(7, "Loops.fill(3, 7)[2]")])

pair("Loops", "reverse", "deletion", """
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
    """, """
    public static int[] reverse(int[] xs) {
        int[] out = new int[xs.length];
        int last = xs.length - 1;
        for (int k = 0; k < xs.length; k++) {
            out[last - k] = xs[k];
        }
        return out;
    }
    """, [eq(3, "Loops.reverse(new int[] {1, 2, 3})[0]"), eq(1, "Loops.reverse(new int[] {1, 2, 3})[2]")])

pair("Loops", "countAbove", "deletion", """
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
    """, """
    public static int countAbove(int[] xs, int limit) {
        int count = 0;
        for (int x : xs) {
            if (x > limit) {
                count++;
            }
        }
        return count;
    }
    """, [eq(2, "Loops.countAbove(new int[] {1, 5, 9}, 4)"), eq(0, "Loops.countAbove(new int[0], 4)")])

pair("Loops", "firstIndexOf", "deletion", """
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
    """, """
    public static int firstIndexOf(int[] xs, int target) {
        int index = -1;
        for (int k = 0; k < xs.length; k++) {
            if (xs[k] == target) {
                return k;
            }
        }
        return index;
    }
    """, [eq(1, "Loops.firstIndexOf(new int[] {4, 8, 8}, 8)"), eq(-1, "Loops.firstIndexOf(new int[] {4}, 8)")])

pair("Collect", "distinctCount", "deletion", """
    public static int distinctCount(String[] items) {
        Set<String> seen = new HashSet<String>();
        List<String> order = new ArrayList<String>();
        for (String item : items) {
            seen.add(item);
        }
        return seen.size();
    }
    """, """
    public static int distinctCount(String[] items) {
        Set<String> seen = new HashSet<String>();
        for (String item : items) {
            seen.add(item);
        }
        return seen.size();
    }
    """, [eq(2, 'Collect.distinctCount(new String[] {"a", "b", "a"})')])

pair("Collect", "frequency", "deletion", """
    public static int frequency(String[] items, String word) {
        Map<String, Integer> counts = new HashMap<String, Integer>();
        int hits = 0;
        int misses = 0;
        for (String item : items) {
            if (item.equals(word)) {
                hits++;
            } else {
                misses++;
            }
        }
        return hits;
    }
    """, """
    public static int frequency(String[] items, String word) {
        int hits = 0;
        for (String item : items) {
            if (item.equals(word)) {
                hits++;
            }
        }
        return hits;
    }
    """, [eq(2, 'Collect.frequency(new String[] {"x", "y", "x"}, "x")'), eq(0, 'Collect.frequency(new String[0], "x")')])

# ---- rewrites ----------------------------------------------------------------

for i, (expr, args, want) in enumerate([("a + b", "(2, 3)", 5), ("a * b - 1", "(3, 4)", 11), ("(a + b) / 2", "(4, 8)", 6),
                                        ("a > b ? a : b", "(7, 3)", 7)]):
    pair("Arith", "direct%d" % i, "rewrite",
         f"""
         public static int direct{i}(int a, int b) {{
             int value = {expr};
             return value;
         }}
         """,
         f"""
         public static int direct{i}(int a, int b) {{
             return {expr};
         }}
         """,
         [eq(want, f"Arith.direct{i}{args}")])

pair("Arith", "average", "rewrite", """
    public static double average(int[] xs) {
        double sum = 0;
        for (int i = 0; i < xs.length; i++) {
            sum += xs[i];
        }
        return xs.length == 0 ? 0 : sum / xs.length;
    }
    """, """
    public static double average(int[] xs) {
        double sum = 0;
        for (int x : xs) {
            sum += x;
        }
        return xs.length == 0 ? 0 : sum / xs.length;
    }
    """, [eq("2.5", "Arith.average(new int[] {2, 3})"), eq("0.0", "Arith.average(new int[0])")])

pair("Arith", "product", "rewrite", """
    public static long product(int[] xs) {
        long acc = 1;
        for (int i = 0; i < xs.length; i++) {
            acc *= xs[i];
        }
        return acc;
    }
    """, """
    public static long product(int[] xs) {
        long acc = 1;
        for (int x : xs) {
            acc *= x;
        }
        return acc;
    }
    """, [eq("24L", "Arith.product(new int[] {2, 3, 4})")],
    broken="""
    public static long product(int[] xs) {
        long acc = 0;
        for (int x : xs) {
            acc *= x;
        }
        return acc;
    }
    """)

pair("Arith", "sign", "rewrite", """
    public static int sign(int v) {
        int result;
        if (v < 0) {
            result = -1;
        } else {
            result = 1;
        }
        return result;
    }
    """, """
    public static int sign(int v) {
        int result = v < 0 ? -1 : 1;
        return result;
    }
    """, [eq(-1, "Arith.sign(-5)"), eq(1, "Arith.sign(5)")])

pair("Arith", "half", "rewrite", """
    public static int half(int v) {
        int doubled = v * 2;
        int quarter = doubled / 4;
        return quarter;
    }
    """, """
    public static int half(int v) {
        int quarter = v * 2 / 4;
        return quarter;
    }
    """, [eq(3, "Arith.half(6)"), eq(0, "Arith.half(1)")])

pair("Flags", "isBlank", "rewrite", """
    public static boolean isBlank(String s) {
        if (s.trim().isEmpty() == true) {
            return true;
        }
        return false;
    }
    """, """
    public static boolean isBlank(String s) {
        if (s.trim().isEmpty()) {
            return true;
        }
        return false;
    }
    """, [eq(True, 'Flags.isBlank("  ")'), eq(False, 'Flags.isBlank(" x ")')])

pair("Flags", "isPresent", "rewrite", """
    public static boolean isPresent(String s) {
        if (false == (s == null)) {
            return true;
        }
        return false;
    }
    """, """
    public static boolean isPresent(String s) {
        if (!(s == null)) {
            return true;
        }
        return false;
    }
    """, [eq(True, 'Flags.isPresent("a")'), eq(False, "Flags.isPresent(null)")])

pair("Flags", "notNot", "rewrite", """
    public static boolean notNot(boolean flag) {
        boolean copy = !!flag;
        return copy;
    }
    """, """
    public static boolean notNot(boolean flag) {
        boolean copy = flag;
        return copy;
    }
    """, [eq(True, "Flags.notNot(true)"), eq(False, "Flags.notNot(false)")])

pair("Flags", "positive", "rewrite", """
    public static boolean positive(int v) {
        boolean result = v > 0 ? true : false;
        return result;
    }
    """, """
    public static boolean positive(int v) {
        boolean result = v > 0;
        return result;
    }
    """, [eq(True, "Flags.positive(2)"), eq(False, "Flags.positive(-2)")],
    broken="""
    public static boolean positive(int v) {
        boolean result = v >= 0;
        return result;
    }
    """)

pair("Flags", "bothSet", "rewrite", """
    public static int bothSet(boolean a, boolean b) {
        if (a) {
            if (b) {
                return 1;
            }
        }
        return 0;
    }
    """, """
    public static int bothSet(boolean a, boolean b) {
        if (a && b) {
            return 1;
        }
        return 0;
    }
    """, [eq(1, "Flags.bothSet(true, true)"), eq(0, "Flags.bothSet(true, false)"), eq(0, "Flags.bothSet(false, true)")])

pair("Flags", "inWindow", "rewrite", """
    public static boolean inWindow(int v, int lo, int hi) {
        if (v >= lo) {
            if (v < hi) {
                return true;
            }
        }
        return false;
    }
    """, """
    public static boolean inWindow(int v, int lo, int hi) {
        if (v >= lo && v < hi) {
            return true;
        }
        return false;
    }
    """, [eq(True, "Flags.inWindow(2, 1, 3)"), eq(False, "Flags.inWindow(3, 1, 3)"), eq(False, "Flags.inWindow(0, 1, 3)")])

pair("Flags", "isEmptyFlag", "rewrite", """
    public static boolean isEmptyFlag(int[] xs) {
        if (xs.length == 0) {
            return true;
        } else {
            return false;
        }
    }
    """, """
    public static boolean isEmptyFlag(int[] xs) {
        return xs.length == 0;
    }
    """, [eq(True, "Flags.isEmptyFlag(new int[0])"), eq(False, "Flags.isEmptyFlag(new int[1])")])

pair("Texts", "describe", "rewrite", """
    public static String describe(int n) {
        String label;
        if (n == 1) {
            label = "one";
        } else {
            label = "many";
        }
        return label;
    }
    """, """
    public static String describe(int n) {
        String label = n == 1 ? "one" : "many";
        return label;
    }
    """, [eq('"one"', "Texts.describe(1)"), eq('"many"', "Texts.describe(4)")])

pair("Texts", "concatAll", "rewrite", """
    public static String concatAll(String[] parts) {
        StringBuilder out = new StringBuilder();
        for (int i = 0; i < parts.length; i++) {
            out.append(parts[i]);
        }
        return out.toString();
    }
    """, """
    public static String concatAll(String[] parts) {
        StringBuilder out = new StringBuilder();
        for (String part : parts) {
            out.append(part);
        }
        return out.toString();
    }
    """, [eq('"abc"', 'Texts.concatAll(new String[] {"a", "bc"})')])

pair("Texts", "greeting", "rewrite", """
    public static String greeting(String name) {
        String text = "Hello, " + name;
        return text;
    }
    """, """
    public static String greeting(String name) {
        return "Hello, " + name;
    }
    """, [eq('"Hello, Ada"', 'Texts.greeting("Ada")')])

pair("Texts", "firstChar", "rewrite", """
    public static char firstChar(String s) {
        String trimmed = s.trim();
        char c = trimmed.charAt(0);
        return c;
    }
    """, """
    public static char firstChar(String s) {
        char c = s.trim().charAt(0);
        return c;
    }
    """, [eq("'q'", 'Texts.firstChar("  quiet")')])

pair("Texts", "hasText", "rewrite", """
    public static boolean hasText(String s) {
        if (s.length() == 0 == false) {
            return true;
        }
        return false;
    }
    """, """
    public static boolean hasText(String s) {
        if (s.length() != 0) {
            return true;
        }
        return false;
    }
    """, [eq(True, 'Texts.hasText("x")'), eq(False, 'Texts.hasText("")')])

pair("Texts", "isEmptyText", "rewrite", """
    public static boolean isEmptyText(String s) {
        return s.length() == 0;
    }
    """, """
    public static boolean isEmptyText(String s) {
        return s.isEmpty();
    }
    """, [eq(True, 'Texts.isEmptyText("")'), eq(False, 'Texts.isEmptyText("a")')])

pair("Loops", "sumArray", "rewrite", """
    public static int sumArray(int[] xs) {
        int total = 0;
        for (int i = 0; i < xs.length; i++) {
            total += xs[i];
        }
        return total;
    }
    """, """
    public static int sumArray(int[] xs) {
        int total = 0;
        for (int x : xs) {
            total += x;
        }
        return total;
    }
    """, [eq(6, "Loops.sumArray(new int[] {1, 2, 3})"), eq(0, "Loops.sumArray(new int[0])")])

pair("Loops", "countMatches", "rewrite", """
    public static int countMatches(String[] words, String target) {
        int n = 0;
        for (int i = 0; i < words.length; i++) {
            if (words[i].equals(target)) {
                n++;
            }
        }
        return n;
    }
    """, """
    public static int countMatches(String[] words, String target) {
        int n = 0;
        for (String word : words) {
            if (word.equals(target)) {
                n++;
            }
        }
        return n;
    }
    """, [eq(2, 'Loops.countMatches(new String[] {"a", "b", "a"}, "a")')])

pair("Loops", "smallest", "rewrite", """
    public static int smallest(int[] xs) {
        int best = Integer.MAX_VALUE;
        for (int x : xs) {
            if (x < best) {
                best = x;
            }
        }
        return best;
    }
    """, """
    public static int smallest(int[] xs) {
        int best = Integer.MAX_VALUE;
        for (int x : xs) {
            best = Math.min(best, x);
        }
        return best;
    }
    """, [eq(-3, "Loops.smallest(new int[] {4, -3, 8})")],
    broken="""
    public static int smallest(int[] xs) {
        int best = Integer.MAX_VALUE;
        for (int x : xs) {
            best = Math.max(best, x);
        }
        return best;
    }
    """)

pair("Loops", "anyZero", "rewrite", """
    public static boolean anyZero(int[] xs) {
        for (int i = 0; i < xs.length; i++) {
            if (xs[i] == 0) {
                return true;
            }
        }
        return false;
    }
    """, """
    public static boolean anyZero(int[] xs) {
        for (int x : xs) {
            if (x == 0) {
                return true;
            }
        }
        return false;
    }
    """, [eq(True, "Loops.anyZero(new int[] {1, 0})"), eq(False, "Loops.anyZero(new int[] {1})")])

pair("Loops", "scaled", "rewrite", """
    public static int scaled(int[] xs, int factor) {
        int total = 0;
        for (int x : xs) {
            int step = x * factor;
            total += step;
        }
        return total;
    }
    """, """
    public static int scaled(int[] xs, int factor) {
        int total = 0;
        for (int x : xs) {
            total += x * factor;
        }
        return total;
    }
    """, [eq(12, "Loops.scaled(new int[] {1, 3}, 3)")])

pair("Collect", "collectKeys", "rewrite", """
    public static int collectKeys(String[] keys) {
        Set<String> out = new HashSet<String>();
        for (String key : keys) {
            out.add(key.toLowerCase());
        }
        return out.size();
    }
    """, """
    public static int collectKeys(String[] keys) {
        Set<String> out = new HashSet<>();
        for (String key : keys) {
            out.add(key.toLowerCase());
        }
        return out.size();
    }
    """, [eq(2, 'Collect.collectKeys(new String[] {"A", "a", "b"})')])

pair("Collect", "buildList", "rewrite", """
    public static int buildList(int n) {
        List<Integer> out = new ArrayList<Integer>();
        for (int k = 0; k < n; k++) {
            out.add(Integer.valueOf(k));
        }
        return out.size();
    }
    """, """
    public static int buildList(int n) {
        List<Integer> out = new ArrayList<>();
        for (int k = 0; k < n; k++) {
            out.add(Integer.valueOf(k));
        }
        return out.size();
    }
    """, [eq(4, "Collect.buildList(4)")])

pair("Collect", "lookup", "rewrite", """
    public static int lookup(String[] keys, String wanted) {
        Map<String, Integer> index = new HashMap<String, Integer>();
        for (int k = 0; k < keys.length; k++) {
            index.put(keys[k], Integer.valueOf(k));
        }
        Integer found = (Integer) index.get(wanted);
        int result = found == null ? -1 : found.intValue();
        return result;
    }
    """, """
    public static int lookup(String[] keys, String wanted) {
        Map<String, Integer> index = new HashMap<>();
        for (int k = 0; k < keys.length; k++) {
            index.put(keys[k], Integer.valueOf(k));
        }
        Integer found = (Integer) index.get(wanted);
        return found == null ? -1 : found.intValue();
    }
    """, [eq(1, 'Collect.lookup(new String[] {"a", "b"}, "b")'), eq(-1, 'Collect.lookup(new String[] {"a"}, "z")')])

pair("Collect", "uniqueSorted", "rewrite", """
    public static String uniqueSorted(String[] items) {
        TreeSet<String> sorted = new TreeSet<String>();
        for (int i = 0; i < items.length; i++) {
            sorted.add(items[i]);
        }
        String joined = sorted.toString();
        return joined;
    }
    """, """
    public static String uniqueSorted(String[] items) {
        TreeSet<String> sorted = new TreeSet<>();
        for (String item : items) {
            sorted.add(item);
        }
        return sorted.toString();
    }
    """, [eq('"[a, b]"', 'Collect.uniqueSorted(new String[] {"b", "a", "b"})')])

pair("Collect", "bucketOf", "rewrite", """
    public static String bucketOf(int v) {
        String bucket;
        if (v < 10) {
            bucket = "small";
        } else {
            bucket = "large";
        }
        String result = bucket;
        return result;
    }
    """, """
    public static String bucketOf(int v) {
        return v < 10 ? "small" : "large";
    }
    """, [eq('"small"', "Collect.bucketOf(3)"), eq('"large"', "Collect.bucketOf(30)")])

CLASS_IMPORTS = {"Collect": ["java.util.ArrayList", "java.util.HashMap", "java.util.HashSet", "java.util.List",
                             "java.util.Map", "java.util.Set", "java.util.TreeSet"]}


def indent(text, n=4):
    return "".join((" " * n + line) if line.strip() else line for line in text.splitlines(True))


def java_literal(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    return str(v)


def class_file(cls, which):
    methods = [p for p in PAIRS if p["cls"] == cls]
    out = ["package %s;\n\n" % PKG]
    for imp in CLASS_IMPORTS.get(cls, []):
        out.append("import %s;\n" % imp)
    if CLASS_IMPORTS.get(cls):
        out.append("\n")
    out.append("public final class %s {\n" % cls)
    out.append("    private %s() {\n    }\n" % cls)
    for p in methods:
        out.append("\n" + indent(p[which]))
    out.append("}\n")
    return "".join(out)


def test_file(cls):
    methods = [p for p in PAIRS if p["cls"] == cls]
    out = ["package %s;\n\n" % PKG, "public class %sTest {\n" % cls]
    for k, p in enumerate(methods):
        if k:
            out.append("\n")
        out.append("    public void test%s%s() {\n" % (p["name"][0].upper(), p["name"][1:]))
        for t in p["tests"]:
            out.append("        %s\n" % t)
        out.append("    }\n")
    out.append("}\n")
    return "".join(out)


def normalize_tests():
    for p in PAIRS:
        fixed = []
        for t in p["tests"]:
            fixed.append(t.replace("Check.equal(True,", "Check.equal(true,").replace("Check.equal(False,", "Check.equal(false,"))
        p["tests"] = fixed


CHECK = """package corpus;

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
"""


def support_files():
    runner = os.path.join(HERE, "..", "javaproj", "src", "test", "java", "demo", "TestRunner.java")
    with open(runner) as f:
        text = f.read().replace("package demo;", "package %s;" % PKG, 1)
    with open(os.path.join(HERE, "src/test/java", PKG, "TestRunner.java"), "w") as f:
        f.write(text)
    with open(os.path.join(HERE, "src/test/java", PKG, "Check.java"), "w") as f:
        f.write(CHECK)
    shutil.copyfile(os.path.join(HERE, "..", "javaproj", "build.sh"), os.path.join(HERE, "build.sh"))
    with open(os.path.join(HERE, "simplikit.toml"), "w") as f:
        f.write('[project]\nroot = "."\nbuild = "sh build.sh"\ntest = "sh test.sh"\ntimeout = 300\n'
                'mode = "report-files"\nreports = "test-reports"\n')


def main():
    normalize_tests()
    names = [(p["cls"], p["name"]) for p in PAIRS]
    assert len(set(names)) == len(names)
    classes = sorted({p["cls"] for p in PAIRS})
    for sub in ("src/main/java", "after", "src/test/java/%s" % PKG):
        path = os.path.join(HERE, sub, PKG) if sub != "src/test/java/%s" % PKG else os.path.join(HERE, sub)
        if sub != "src/test/java/%s" % PKG and os.path.isdir(path):
            shutil.rmtree(path)
        os.makedirs(path, exist_ok=True)
    for cls in classes:
        with open(os.path.join(HERE, "src/main/java", PKG, cls + ".java"), "w") as f:
            f.write(class_file(cls, "original"))
        with open(os.path.join(HERE, "after", PKG, cls + ".java"), "w") as f:
            f.write(class_file(cls, "simplified"))
        with open(os.path.join(HERE, "src/test/java", PKG, cls + "Test.java"), "w") as f:
            f.write(test_file(cls))
    support_files()
    with open(os.path.join(HERE, "test.sh"), "w") as f:
        f.write("#!/bin/sh\nset -e\ncd \"$(dirname \"$0\")\"\nTC=${SIMPLIKIT_JAVA_TOOLCHAIN:-/opt/javatc}\nJAVA=java\n"
                "if [ -x \"$TC/jre/bin/java\" ]; then JAVA=\"$TC/jre/bin/java\"; fi\n"
                "exec \"$JAVA\" -cp out %s.TestRunner test-reports %s\n"
                % (PKG, " ".join("%s.%sTest" % (PKG, c) for c in classes)))
    with open(os.path.join(HERE, "pairs.jsonl"), "w") as f:
        for p in PAIRS:
            rec = {"file": "src/main/java/%s/%s.java" % (PKG, p["cls"]), "method": p["name"], "kind": p["kind"],
                   "original": p["original"], "simplified": p["simplified"]}
            if p["broken"]:
                rec["broken"] = p["broken"]
            f.write(json.dumps(rec, sort_keys=True) + "\n")
    print("%d pairs (%d deletion)" % (len(PAIRS), sum(p["kind"] == "deletion" for p in PAIRS)))


if __name__ == "__main__":
    main()
