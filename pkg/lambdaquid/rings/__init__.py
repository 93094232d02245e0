from lambdaquid.rings.abstract_ring import Abstract_Ring
from lambdaquid.rings.ring_value import RingId, RingValue, UnitSign, \
                                        INT, POLY, GAUSS_EVEN, REAL, mod, \
                                        ring_add, ring_sub, ring_mul, \
                                        ring_neg, ring_eq, ring_compare, \
                                        ring_from_int, ring_zero, ring_one, \
                                        is_pm_one, eval_poly_at, \
                                        parse_value, format_value, \
                                        integer, modular, poly, gauss, real
