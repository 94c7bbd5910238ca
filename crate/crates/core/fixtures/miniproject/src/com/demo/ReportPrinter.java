package com.demo;

import java.util.List;

/** Renders aligned text tables for statements. */
public class ReportPrinter {

    /** Emits the statement banner. */
    public String printHeader() {
        return "=== STATEMENT ===";
    }

    /** Emits one labelled table row. */
    public String printRow(String label, double value) {
        return pad(label, 16) + value;
    }

    /** Emits the closing row-count trailer. */
    public String footer(int rows) {
        return "rows=" + rows;
    }

    /** Joins pre-rendered rows into a table body. */
    public String renderTable(List<String> rows) {
        StringBuilder sb = new StringBuilder();
        for (String row : rows) {
            sb.append(row).append('\n');
        }
        return sb.toString();
    }

    /** Right-pads a cell to the column width. */
    public String pad(String s, int width) {
        StringBuilder sb = new StringBuilder(s);
        while (sb.length() < width) {
            sb.append(' ');
        }
        return sb.toString();
    }
}
