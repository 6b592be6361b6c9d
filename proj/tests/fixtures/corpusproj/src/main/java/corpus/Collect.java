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
        List<String> order = new ArrayList<String>();
        for (String item : items) {
            seen.add(item);
        }
        return seen.size();
    }

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

    public static int collectKeys(String[] keys) {
        Set<String> out = new HashSet<String>();
        for (String key : keys) {
            out.add(key.toLowerCase());
        }
        return out.size();
    }

    public static int buildList(int n) {
        List<Integer> out = new ArrayList<Integer>();
        for (int k = 0; k < n; k++) {
            out.add(Integer.valueOf(k));
        }
        return out.size();
    }

    public static int lookup(String[] keys, String wanted) {
        Map<String, Integer> index = new HashMap<String, Integer>();
        for (int k = 0; k < keys.length; k++) {
            index.put(keys[k], Integer.valueOf(k));
        }
        Integer found = (Integer) index.get(wanted);
        int result = found == null ? -1 : found.intValue();
        return result;
    }

    public static String uniqueSorted(String[] items) {
        TreeSet<String> sorted = new TreeSet<String>();
        for (int i = 0; i < items.length; i++) {
            sorted.add(items[i]);
        }
        String joined = sorted.toString();
        return joined;
    }

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
}
