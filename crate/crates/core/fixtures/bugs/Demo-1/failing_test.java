public void testApplyRateSinglePeriod() {
    InterestCalculator calc = new InterestCalculator(0.10);
    // One accrual period on a 100.00 balance at 10% must yield 110.00.
    double amount = calc.applyRate(100.0, 1);
    assertEquals(110.0, amount, 1e-9);
}
