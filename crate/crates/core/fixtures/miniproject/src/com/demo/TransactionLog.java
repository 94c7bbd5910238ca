package com.demo;

import java.util.ArrayList;
import java.util.List;

/** Append-only journal of posted transactions. */
public class TransactionLog {

    private final List<String> lines = new ArrayList<>();

    /** Records one journal line. */
    public void append(String entry) {
        lines.add(entry);
    }

    /** Snapshot of every recorded journal line. */
    public List<String> entries() {
        return new ArrayList<>(lines);
    }

    /** Discards the journal contents. */
    public void clear() {
        lines.clear();
    }

    /** Builds a journal line from a posting kind and an amount. */
    public String formatEntry(String kind, double amount) {
        return kind + "|" + amount;
    }

    /** Splits a journal line back into its posting kind. */
    public String parseEntry(String line) {
        int sep = line.indexOf('|');
        if (sep < 0) {
            return line;
        }
        return line.substring(0, sep);
    }

    /** Number of recorded journal lines. */
    public int size() {
        return lines.size();
    }
}
