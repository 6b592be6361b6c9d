package corpus;

public class CollectTest {
    public void testDistinctCount() {
        Check.equal(2, Collect.distinctCount(new String[] {"a", "b", "a"}));
    }

    public void testFrequency() {
        Check.equal(2, Collect.frequency(new String[] {"x", "y", "x"}, "x"));
        Check.equal(0, Collect.frequency(new String[0], "x"));
    }

    public void testCollectKeys() {
        Check.equal(2, Collect.collectKeys(new String[] {"A", "a", "b"}));
    }

    public void testBuildList() {
        Check.equal(4, Collect.buildList(4));
    }

    public void testLookup() {
        Check.equal(1, Collect.lookup(new String[] {"a", "b"}, "b"));
        Check.equal(-1, Collect.lookup(new String[] {"a"}, "z"));
    }

    public void testUniqueSorted() {
        Check.equal("[a, b]", Collect.uniqueSorted(new String[] {"b", "a", "b"}));
    }

    public void testBucketOf() {
        Check.equal("small", Collect.bucketOf(3));
        Check.equal("large", Collect.bucketOf(30));
    }
}
