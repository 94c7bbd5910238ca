package com.demo.unit;

import java.util.Comparator;
import java.util.List;

/** Extraction edge cases: nesting, anonymous classes, varargs, generics. */
public class Edges {

    static int CALLS = 0;

    static {
        CALLS = 1;
    }

    /** Joins values with commas. "Braces { inside } strings" stay put. */
    public String join(String... parts) {
        StringBuilder sb = new StringBuilder("{");
        for (String p : parts) {
            sb.append(p).append(',');
        }
        return sb.append('}').toString();
    }

    /** Picks the larger by a generic comparator. */
    public <T> T max(List<T> items, Comparator<? super T> cmp) {
        T best = items.get(0);
        for (T item : items) {
            if (cmp.compare(item, best) > 0) {
                best = item;
            }
        }
        return best;
    }

    /** Sorts with an anonymous comparator; its compare method is not indexed. */
    public void sortByLength(List<String> items) {
        items.sort(new Comparator<String>() {
            @Override
            public int compare(String a, String b) {
                return a.length() - b.length();
            }
        });
    }

    /** Named nested class; its methods belong to the inner class. */
    public static class Inner {

        /** Squares the input. */
        public long square(long v) {
            return v * v;
        }
    }

    @Deprecated
    public int annotated(@SuppressWarnings("unused") int x) {
        return x;
    }
}
