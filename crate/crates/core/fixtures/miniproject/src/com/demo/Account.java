package com.demo;

/**
 * A customer account holding a running balance. Monthly maintenance
 * fees are charged through the fee schedule.
 */
public class Account {

    private final String owner;
    private double balance;

    /** Opens an empty account for the named owner. */
    public Account(String owner) {
        this.owner = owner;
        this.balance = 0.0;
    }

    /** Adds funds to the account. */
    public void deposit(double amount) {
        if (amount > 0.0) {
            balance += amount;
        }
    }

    /** Removes funds when sufficient balance is available. */
    public boolean withdraw(double amount) {
        if (amount <= 0.0 || amount > balance) {
            return false;
        }
        balance -= amount;
        return true;
    }

    /** Current balance. */
    public double balance() {
        return balance;
    }

    /**
     * Charges the monthly maintenance fee against the balance. The fee
     * deduction is skipped when the charge would overdraw the account.
     */
    public void applyMonthlyFee(double fee) {
        if (fee <= balance) {
            balance -= fee;
        }
    }

    /**
     * Monthly maintenance fee charged for an account tier. Higher tiers
     * pay a larger monthly fee under the schedule.
     */
    public double feeSchedule(int tier) {
        if (tier <= 0) {
            return 0.0;
        }
        if (tier == 1) {
            return 1.5;
        }
        return 1.5 * tier;
    }

    /** Name of the account owner. */
    public String owner() {
        return owner;
    }
}
