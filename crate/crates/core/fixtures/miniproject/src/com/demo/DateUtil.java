package com.demo;

/** Calendar helpers for statement cycles. */
public final class DateUtil {

    /** True for Gregorian leap years. */
    public static boolean isLeapYear(int year) {
        if (year % 400 == 0) {
            return true;
        }
        if (year % 100 == 0) {
            return false;
        }
        return year % 4 == 0;
    }

    /** Day count of a calendar month. */
    public static int daysInMonth(int month, int year) {
        if (month == 2) {
            return isLeapYear(year) ? 29 : 28;
        }
        if (month == 4 || month == 6 || month == 9 || month == 11) {
            return 30;
        }
        return 31;
    }

    /** Shifts a day-of-cycle marker, wrapping at the cycle length. */
    public static int addDays(int day, int delta) {
        int shifted = (day + delta) % 30;
        if (shifted < 0) {
            shifted += 30;
        }
        return shifted;
    }

    /** English month label. */
    public static String monthName(int month) {
        String[] names = {
            "January", "February", "March", "April", "May", "June",
            "July", "August", "September", "October", "November", "December"
        };
        if (month < 1 || month > 12) {
            return "?";
        }
        return names[month - 1];
    }

    /** Ordinal suffix form of a small number. */
    public static String ordinal(int n) {
        int mod100 = n % 100;
        if (mod100 >= 11 && mod100 <= 13) {
            return n + "th";
        }
        int mod10 = n % 10;
        if (mod10 == 1) {
            return n + "st";
        }
        if (mod10 == 2) {
            return n + "nd";
        }
        if (mod10 == 3) {
            return n + "rd";
        }
        return n + "th";
    }
}
