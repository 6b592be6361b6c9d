package corpus;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.HashSet;
import java.util.List;
import java.util.Map;
import java.util.Set;
import java.util.TreeSet;

public final class Collect {
    private Collect() {
    }

    public static int distinctCount(String[] items) {
        Set<String> seen = new HashSet<String>();
        for (String item : items) {
            seen.add(item);
        }
        return seen.size();
    }

    public static int frequency(String[] items, String word) {
        int hits = 0;
        for (String item : items) {
            if (item.equals(word)) {
                hits++;
            }
        }
        return hits;
    }

    public static int collectKeys(String[] keys) {
        Set<String> out = new HashSet<>();
        for (String key : keys) {
            out.add(key.toLowerCase());
        }
        return out.size();
    }

    public static int buildList(int n) {
        List<Integer> out = new ArrayList<>();
        for (int k = 0; k < n; k++) {
            out.add(Integer.valueOf(k));
        }
        return out.size();
    }

    public static int lookup(String[] keys, String wanted) {
        Map<String, Integer> index = new HashMap<>();
        for (int k = 0; k < keys.length; k++) {
            index.put(keys[k], Integer.valueOf(k));
        }
        Integer found = (Integer) index.get(wanted);
        return found == null ? -1 : found.intValue();
    }

    public static String uniqueSorted(String[] items) {
        TreeSet<String> sorted = new TreeSet<>();
        for (String item : items) {
            sorted.add(item);
        }
        return sorted.toString();
    }

    public static String bucketOf(int v) {
        return v < 10 ? "small" : "large";
    }
}
