package corpus;

import java.io.File;
import java.io.FileWriter;
import java.lang.reflect.InvocationTargetException;
import java.lang.reflect.Method;

// Runs public no-arg test* methods and writes one JUnit XML report per class.
public class TestRunner {
    private static String escape(String s) {
        StringBuilder out = new StringBuilder();
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            if (c == '<') out.append("&lt;");
            else if (c == '>') out.append("&gt;");
            else if (c == '&') out.append("&amp;");
            else if (c == '"') out.append("&quot;");
            else out.append(c);
        }
        return out.toString();
    }

    public static void main(String[] args) throws Exception {
        File dir = new File(args[0]);
        dir.mkdirs();
        int bad = 0;
        for (int a = 1; a < args.length; a++) {
            Class cls = Class.forName(args[a]);
            Method[] methods = cls.getDeclaredMethods();
            for (int i = 1; i < methods.length; i++) {
                for (int j = i; j > 0 && methods[j - 1].getName().compareTo(methods[j].getName()) > 0; j--) {
                    Method t = methods[j];
                    methods[j] = methods[j - 1];
                    methods[j - 1] = t;
                }
            }
            StringBuilder cases = new StringBuilder();
            int tests = 0;
            int failures = 0;
            int errors = 0;
            for (int i = 0; i < methods.length; i++) {
                Method m = methods[i];
                if (!m.getName().startsWith("test") || m.getParameterTypes().length != 0) continue;
                tests++;
                cases.append("  <testcase classname=\"").append(cls.getName()).append("\" name=\"").append(m.getName()).append("\"");
                try {
                    Object instance = cls.getDeclaredConstructor(new Class[0]).newInstance(new Object[0]);
                    m.invoke(instance, new Object[0]);
                    cases.append("/>\n");
                    System.out.println("PASS " + cls.getName() + "." + m.getName());
                } catch (InvocationTargetException e) {
                    Throwable cause = e.getCause();
                    String kind = cause instanceof AssertionError ? "failure" : "error";
                    if (cause instanceof AssertionError) failures++;
                    else errors++;
                    cases.append(">\n    <").append(kind).append(" message=\"").append(escape(String.valueOf(cause))).append("\"/>\n  </testcase>\n");
                    System.out.println("FAIL " + cls.getName() + "." + m.getName() + ": " + cause);
                }
            }
            bad += failures + errors;
            FileWriter w = new FileWriter(new File(dir, "TEST-" + cls.getName() + ".xml"));
            w.write("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
            w.write("<testsuite name=\"" + cls.getName() + "\" tests=\"" + tests + "\" failures=\"" + failures + "\" errors=\"" + errors + "\">\n");
            w.write(cases.toString());
            w.write("</testsuite>\n");
            w.close();
        }
        System.exit(bad > 0 ? 1 : 0);
    }
}
