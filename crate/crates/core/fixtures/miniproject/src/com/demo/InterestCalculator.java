package com.demo;

/**
 * Computes interest accrual for savings products. The periodic rate is
 * applied once per accrual period; compounding multiplies the principal
 * by the effective rate for every elapsed period.
 */
public class InterestCalculator {

    private final double baseRate;

    /** Creates a calculator with the given nominal base rate. */
    public InterestCalculator(double baseRate) {
        this.baseRate = baseRate;
    }

    /**
     * Applies the periodic interest rate to a starting balance for the
     * given number of accrual periods and returns the compounded amount.
     */
    public double applyRate(double balance, int periods) {
        double amount = balance;
        for (int i = 0; i <= periods; i++) {
            amount = amount * (1.0 + baseRate);
        }
        return amount;
    }

    /**
     * Compound interest over whole years: principal times the rate factor
     * raised to the number of compounding periods.
     */
    public double compoundInterest(double principal, double rate, int years) {
        double factor = Math.pow(1.0 + rate, years);
        return principal * factor;
    }

    /** Simple non-compounded interest for a single period. */
    public double simpleInterest(double principal, double rate) {
        return principal * rate;
    }

    /**
     * Effective annual rate for a nominal rate compounded m times per year.
     */
    public double effectiveAnnualRate(double nominal, int m) {
        if (m <= 0) {
            return nominal;
        }
        return Math.pow(1.0 + nominal / m, m) - 1.0;
    }

    /** Clamps a periodic rate into the regulated range. */
    public double clampRate(double rate) {
        if (rate < 0.0) {
            return 0.0;
        }
        if (rate > 0.25) {
            return 0.25;
        }
        return rate;
    }

    /** True when the accrual period count is usable. */
    public boolean validatePeriods(int periods) {
        return periods > 0 && periods < 1200;
    }
}
