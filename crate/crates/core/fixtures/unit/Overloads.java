package com.demo.unit;

/** Overload pair plus a no-argument helper. */
public class Overloads {

    /** Doubles a single value. */
    public int f(int a) {
        return a * 2;
    }

    /** Sums a pair of values. */
    public int f(int a, int b) {
        return a + b;
    }

    /** Constant seed. */
    public int g() {
        return 7;
    }
}
