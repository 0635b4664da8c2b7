"""Frozen reference values from independent high-precision or quadrature oracles."""

ML_HALF_MINUS_ONE = 0.427583576155807
BESSEL_I_HALF_2 = 2.046236863089055
BESSEL1_PDF_1 = 0.30850832255367104
ML_TABLE = {
    (0.3, 0.5): 0.63264900594359902,
    (0.3, 1.0): 0.45659440832969067,
    (0.3, 2.0): 0.29023222616787535,
    (0.3, 3.5): 0.18646550952401198,
    (0.3, 5.0): 0.13708086902027064,
    (0.5, 0.5): 0.61569034419292587,
    (0.5, 1.0): 0.427583576155807,
    (0.5, 2.0): 0.25539567631050574,
    (0.5, 3.5): 0.1552936556088943,
    (0.5, 5.0): 0.11070463773306863,
    (0.9, 0.5): 0.60340549869586097,
    (0.9, 1.0): 0.37606602142464188,
    (0.9, 2.0): 0.16352830001693005,
    (0.9, 3.5): 0.063854273735752437,
    (0.9, 5.0): 0.034431324804098424,
}
LINNIK_HALF_CDF = {
    0.05: 0.20962323632863509,
    0.2: 0.35621172786783755,
    0.5: 0.47684341626975328,
    1.0: 0.57241642384480342,
    1.5: 0.62683432597765827,
    2.0: 0.6637960160086312,
}
BESSEL1_CDF = {
    0.1: 0.036758290460564375,
    0.6210526315789474: 0.22248513662052274,
    1.1421052631578947: 0.38863271443106516,
    1.6631578947368422: 0.52903146352803469,
    2.1842105263157894: 0.64315487209518445,
    2.705263157894737: 0.73331924744163676,
    3.2263157894736842: 0.80301031610387748,
    3.7473684210526317: 0.85594113170234714,
    4.268421052631579: 0.89556721220803937,
    4.7894736842105265: 0.92487558067812162,
    5.310526315789474: 0.94632913184947905,
    5.831578947368421: 0.96189225982047453,
    6.352631578947369: 0.97309329997771435,
    6.873684210526315: 0.98109843634317022,
    7.394736842105263: 0.98678364159397107,
    7.91578947368421: 0.99079837684522261,
    8.436842105263159: 0.99361888005735789,
    8.957894736842105: 0.99559106781135288,
    9.478947368421053: 0.99696412495592479,
    10.0: 0.99791624745284854,
}
GAMMA21_CDF_1 = 0.26424111765711536

# log characteristic function of sum xi_k tau_k^-2, xi ~ Exp(1), lambda = 1 (double quadrature)
POWER2_LOG_CF = {0.5: complex(-0.7853981632974498, 0.7853981633974538), 1.0: complex(-1.1107207344395917, 1.1107207345395942)}
