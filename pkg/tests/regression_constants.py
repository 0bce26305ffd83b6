"""Frozen reference values.

High-precision values were evaluated with mpmath at 30 digits.  Sudden-death
times come from ``tools/freeze_sudden_death.py``: fixed-step RK4 (step 1e-4)
integration of the covariance ODE, negativity through the determinant
expression, bisection of the first sign change to 1e-13 in t.
Configuration: two-mode squeezed vacuum r = 4, m = omega1 = omega2 = 1.
"""

COTH_HALF = 2.16395341373865284877  # coth(0.5)
COSH4_HALF = 13.654116418008243315  # cosh(4) / 2
SINH4_HALF = 13.644958598563876224  # sinh(4) / 2
SINH4_SQ_QUARTER = 186.18489515652226108  # sinh(4)^2 / 4
COSH4_SQ = 745.73958062608904431  # cosh(4)^2
SINH4_SQ = COSH4_SQ - 1.0
HALF_EXP_MINUS4 = 0.0091578194443670901469  # exp(-4) / 2
EXP_MINUS_TENTH_PI = 0.73040269104864559813  # exp(-0.1 pi)
F_COSH4 = 3.6138174635076089626  # f(cosh 4), natural log
R4_OVER_LN2 = 5.7707801635558536294  # 4 / ln 2
S_INF_T1 = 0.84763986707149463822  # (coth(0.5)^2 - 1)^2 / 16
EN_INF_T1 = -1.1136694407120155138  # -log2 coth(0.5)

# (lam, T) -> first zero of E_N(t)
SUDDEN_DEATH_RK4 = {
    (0.1, 0.5): 7.0986677209114735,
    (0.1, 1.0): 3.058072565857089,
    (0.1, 2.0): 1.3821693513176079,
    (0.1, 4.0): 0.6525601847856527,
    (0.05, 2.0): 2.7643387026352353,
    (0.2, 2.0): 0.691084675658531,
}
