"""Closed-form copula partial derivatives (generated file).

Generated by tools/generate_copula_derivs.py; do not edit by hand.
Each *_vals/_score/_info function returns a dict mapping derivative
multi-indices (d_u, d_v, d_alpha) to values, vectorized over numpy inputs.
"""

import numpy


def clayton_vals(u, v, a):
    x0 = u**(-a)
    x1 = v**(-a)
    x2 = x0 + x1 - 1
    x3 = x2**(-1/a)
    x4 = x3/x2
    x5 = x0/u
    x6 = x1/v
    return {
        (0, 0, 0): x3,
        (1, 0, 0): x4*x5,
        (0, 1, 0): x4*x6,
        (1, 1, 0): x3*x5*x6*(a + 1)/x2**2,
    }

def clayton_score(u, v, a):
    x0 = u**(-a)
    x1 = v**(-a)
    x2 = x0 + x1 - 1
    x3 = a**(-1.0)
    x4 = x2**(-x3)
    x5 = u**(-1.0)
    x6 = x2**(-1.0)
    x7 = x0*x4*x6
    x8 = x5*x7
    x9 = v**(-1.0)
    x10 = x1*x6
    x11 = x10*x4
    x12 = x11*x9
    x13 = a + 1
    x14 = x2**(-2.0)
    x15 = x0*x1*x14*x4*x9
    x16 = x15*x5
    x17 = a**2
    x18 = numpy.log(x2)
    x19 = numpy.log(u)
    x20 = numpy.log(v)
    x21 = x0*x19 + x1*x20
    x22 = u**(-2.0)
    x23 = -x0*x6
    x24 = v**(-2.0)
    x25 = -x1*x6 + x13
    x26 = x18*x3
    x27 = x21*x6
    x28 = x3*(x26 + x27)
    x29 = a*x19
    x30 = x28 - x3*(x29 - 1)
    x31 = x27 - x3
    x32 = a*x20
    x33 = -x3*(x32 - 1)
    x34 = 2*a
    return {
        (0, 0, 0): x4,
        (1, 0, 0): x8,
        (0, 1, 0): x12,
        (1, 1, 0): x13*x16,
        (0, 0, 1): x4*(x21*x3*x6 + x18/x17),
        (2, 0, 0): x22*x7*(a*x0*x6 - x13 - x23),
        (0, 2, 0): x11*x24*(a*x1*x6 - x25),
        (1, 0, 1): x8*(x30 + x31),
        (0, 1, 1): x12*(x28 + x31 + x33),
        (1, 1, 1): x16*(x26 + x27*x34 + 3*x27 - x29 - 2*x3 + x30 - x32 + x33 + 1),
        (2, 1, 0): x15*x22*(3*a*x0*x6 + 2*x0*x17*x6 - x17 - x23 - x34 - 1),
        (1, 2, 0): x0*x1*x14*x24*x4*x5*(3*a*x1*x6 - a*(-x10*x34 + x13) - x25),
    }

def clayton_info(u, v, a):
    x0 = u**(-a)
    x1 = v**(-a)
    x2 = x0 + x1 - 1
    x3 = a**(-1.0)
    x4 = x2**(-x3)
    x5 = u**(-1.0)
    x6 = x2**(-1.0)
    x7 = x0*x6
    x8 = x4*x7
    x9 = x5*x8
    x10 = v**(-1.0)
    x11 = x1*x6
    x12 = x11*x4
    x13 = x10*x12
    x14 = a + 1
    x15 = x2**(-2.0)
    x16 = x0*x15
    x17 = x1*x16
    x18 = x17*x4
    x19 = x10*x18
    x20 = x19*x5
    x21 = a**2
    x22 = x21**(-1.0)
    x23 = numpy.log(x2)
    x24 = numpy.log(u)
    x25 = numpy.log(v)
    x26 = x0*x24 + x1*x25
    x27 = -x7
    x28 = a*x7
    x29 = x14 + x27 - x28
    x30 = u**(-2.0)
    x31 = x30*x8
    x32 = -x11
    x33 = x14 + x32
    x34 = -a*x1*x6 + x33
    x35 = v**(-2.0)
    x36 = x12*x35
    x37 = x26*x6
    x38 = -x3 + x37
    x39 = x23*x3
    x40 = x37 + x39
    x41 = x3*x40
    x42 = a*x24
    x43 = x42 - 1
    x44 = x3*x43
    x45 = x41 - x44
    x46 = a*x25
    x47 = x46 - 1
    x48 = x3*x47
    x49 = -x48
    x50 = -x42
    x51 = -x46
    x52 = 2*a
    x53 = x37*x52 + x51
    x54 = x50 + x53 + 1
    x55 = 2*x3
    x56 = x45 - x55
    x57 = x27 + 1
    x58 = x19*x30
    x59 = x11*x52
    x60 = a*(x14 - x59)
    x61 = x18*x5
    x62 = x35*x61
    x63 = x40**2
    x64 = 2*x22*x23
    x65 = x15*x26**2
    x66 = x6*(x0*x24**2 + x1*x25**2)
    x67 = x37*x55
    x68 = x64 - x65 + x66 + x67
    x69 = a*x37 + x38 - 1
    x70 = -x52
    x71 = 2*x7
    x72 = x26*x52
    x73 = -x16*x72 - x3*(x21*x24 + x43 + x70) + x43*x71 + x7
    x74 = x69 + x73
    x75 = x3 - x37
    x76 = x44 + x75
    x77 = 2*x76
    x78 = x29*x41 + x7*x77
    x79 = 2*x11
    x80 = x48 + x75
    x81 = -x1*x15*x72 + x11 - x3*(x21*x25 + x47 + x70) + x47*x79 + x79*x80
    x82 = 2*x22
    x83 = x22*x63
    x84 = -x3*x68
    x85 = 2*x65 - x66 - x67 + x82 + x83 + x84
    x86 = x24*(x42 - 2)
    x87 = 2*x44
    x88 = x3*x86 - x37*x87 - x41*x77 + x43*x82
    x89 = x25*(x46 - 2)
    x90 = 2*x41
    x91 = 2*x48
    x92 = x3*x89 - x37*x91 + x47*x82 - x80*x90
    x93 = u**(-3.0)
    x94 = 3*x21
    x95 = u**(-x52)*x15
    x96 = 2*x21
    x97 = 3*a
    x98 = x21 + x97 + 2
    x99 = -3*x7 + x95
    x100 = v**(-3.0)
    x101 = v**(-x52)*x15
    x102 = 3*x11
    x103 = a*x11
    x104 = -6*x103 + x98
    x105 = x101*x96 + x101*x97 + x101 - x102 + x104 - x11*x94
    x106 = 4*x37
    x107 = -x54
    x108 = 6*a
    x109 = x21*x37
    x110 = x52*x7
    x111 = a**3
    x112 = x21*x7
    x113 = 6*x111
    x114 = 11*x21
    x115 = 6*x21
    return {
        (0, 0, 0): x4,
        (1, 0, 0): x9,
        (0, 1, 0): x13,
        (1, 1, 0): x14*x20,
        (0, 0, 1): x4*(x22*x23 + x26*x3*x6),
        (2, 0, 0): -x29*x31,
        (0, 2, 0): -x34*x36,
        (1, 0, 1): x9*(x38 + x45),
        (0, 1, 1): x13*(x38 + x41 + x49),
        (1, 1, 1): x20*(3*x37 + x39 + x49 + x54 + x56),
        (2, 1, 0): x58*(3*a*x0*x6 + 2*x0*x21*x6 - x21 - x52 - x57),
        (1, 2, 0): x62*(3*a*x1*x6 - x33 - x60),
        (0, 0, 2): x3*x4*(x3*x63 - x68),
        (2, 0, 1): -x31*(x74 + x78),
        (0, 2, 1): -x36*(x34*x41 + x69 + x81),
        (1, 0, 2): x9*(x85 + x88),
        (0, 1, 2): x13*(x85 + x92),
        (3, 0, 0): x8*x93*(-6*x28 - x7*x94 + x95*x96 + x95*x97 + x98 + x99),
        (0, 3, 0): x100*x105*x12,
        (1, 1, 2): x20*(-x106*x43 - x106*x47 - x106 - x107*x90 + x108*x65 + 4*x22 - 6*x3*x37 + x3*x63 + x47*x87 - x52*x66 + x55 - x64 + 5*x65 - 3*x66 + x77*x80 + x83 + x84 + x86 + x87 + x88 + x89 + x91 + x92),
        (2, 1, 1): x58*(a*x47 - a*x74 + x0*x14*x40*x6 + 4*x0*x15*x21*x26 - x107*x71 - x109 - x110*x43 - x110*x47 - x110*x76 - x28 - x29*x40 + x29*x80 - x38 - x53 - x73 - x78),
        (1, 2, 1): x62*(2*a*x1*x40*x6 - 4*a*x11*x47 - a*x11*x76 - a*x40 + a*x43 + a*x76 - a + 6*x1*x15*x21*x26 + x1*x3*x40*x6 + 3*x1*x40*x6 - x106 - x107*x79 - 2*x109 - x11*x76 + x21*x25 - x37*x97 - 2*x39 - x43*x59 - x50 - x51 - x56 - x59*x80 - x59 - x81),
        (3, 1, 0): x19*x93*(5*a + x108*x95 + x111 - 15*x112 - x113*x7 + x113*x95 + x114*x95 + 4*x21 - 12*x28 + x99 + 2),
        (1, 3, 0): x100*x61*(a*(x101*x115 + x104 - x11*x115) - x102*x60 + x105 - x11*x34*x97),
        (2, 2, 0): x18*x30*x35*(-4*x103 + x108*x17 - 5*x11*x21 - x111*x71 - x111*x79 + x111 - 5*x112 + x113*x17 + x114*x17 + x17 - 4*x28 + x32 + x57 + x94 + x97),
    }

def clayton_du(u, v, a):
    x0 = u**(-a)
    x1 = x0 - 1 + v**(-a)
    return x0*x1**(-1/a)/(u*x1)

def frank_vals(u, v, a):
    x0 = numpy.exp(-a*u)
    x1 = 1 - x0
    x2 = -x1
    x3 = 1 - numpy.exp(-a)
    x4 = -1/x3
    x5 = numpy.exp(-a*v)
    x6 = 1 - x5
    x7 = -x4*x6
    x8 = x2*x7 + 1
    x9 = x8**(-1.0)
    x10 = x3**(-1.0)
    x11 = x1*x10*x6
    x12 = (1 - x11)**(-1.0)
    return {
        (0, 0, 0): -numpy.log(x8)/a,
        (1, 0, 0): x0*x7*x9,
        (0, 1, 0): x2*x4*x5*x9,
        (1, 1, 0): a*x0*x10*x12*x5*(x11*x12 + 1),
    }

def frank_score(u, v, a):
    x0 = a**(-1.0)
    x1 = a*u
    x2 = numpy.exp(-x1)
    x3 = 1 - x2
    x4 = -x3
    x5 = numpy.exp(-a)
    x6 = 1 - x5
    x7 = -x6
    x8 = x7**(-1.0)
    x9 = a*v
    x10 = numpy.exp(-x9)
    x11 = 1 - x10
    x12 = -x11
    x13 = x12*x8
    x14 = x13*x4 + 1
    x15 = numpy.log(x14)
    x16 = x14**(-1.0)
    x17 = x4*x8
    x18 = x6**(-1.0)
    x19 = x11*x18
    x20 = x19*x3
    x21 = 1 - x20
    x22 = x21**(-1.0)
    x23 = x20*x22
    x24 = x23 + 1
    x25 = x18*x22
    x26 = x2*x25
    x27 = x10*x26
    x28 = a**2
    x29 = u*x2
    x30 = v*x10
    x31 = x19*x2*x22
    x32 = 1 - x31
    x33 = x25*x3
    x34 = x10*x33
    x35 = a*x5
    x36 = x1*x11 - x10*x9 + x10 + x19*x35 - 1
    x37 = x11*x29 - x20*x5 + x3*x30
    x38 = x18*x35
    x39 = a*u*x2 - x2 - x3*x38 - x3*x9 + 1
    x40 = x27*x28
    x41 = 1 - 2*x34
    return {
        (0, 0, 0): -x0*x15,
        (1, 0, 0): x13*x16*x2,
        (0, 1, 0): x10*x16*x17,
        (1, 1, 0): a*x24*x27,
        (0, 0, 1): -x0*x16*(x12*x4*x5/x7**2 - x13*x29 - x17*x30) + x15/x28,
        (2, 0, 0): -a*x31*x32,
        (0, 2, 0): -a*x34*(1 - x34),
        (1, 0, 1): x26*(-x0*x11 - x0*x36 + x11*x18*x22*x37),
        (0, 1, 1): x10*x25*(-x0*x3 + x0*x39 + x33*x37),
        (1, 1, 1): x27*(2*a*x11*x3*x37/(x21**2*x6**2) + a*x18*x22*x37 - x1 + x11*x18*x22*x39 - x23 - x33*x36 - x38 - x9 + 1),
        (2, 1, 0): x40*(x11*x18*x2*x22*x24 - x23*x32 - x32),
        (1, 2, 0): x40*(-x23*x41 - x41),
    }

def frank_info(u, v, a):
    x0 = a**(-1.0)
    x1 = a*u
    x2 = -x1
    x3 = numpy.exp(x2)
    x4 = 1 - x3
    x5 = -x4
    x6 = numpy.exp(-a)
    x7 = 1 - x6
    x8 = -x7
    x9 = x8**(-1.0)
    x10 = a*v
    x11 = -x10
    x12 = numpy.exp(x11)
    x13 = 1 - x12
    x14 = -x13
    x15 = x14*x9
    x16 = x15*x5 + 1
    x17 = numpy.log(x16)
    x18 = x16**(-1.0)
    x19 = x15*x3
    x20 = x12*x5*x9
    x21 = x7**(-1.0)
    x22 = x13*x21
    x23 = x22*x4
    x24 = 1 - x23
    x25 = x24**(-1.0)
    x26 = x23*x25
    x27 = x26 + 1
    x28 = x21*x25
    x29 = x28*x3
    x30 = x12*x29
    x31 = a*x30
    x32 = a**2
    x33 = x32**(-1.0)
    x34 = x22*x25
    x35 = x3*x34
    x36 = 1 - x35
    x37 = x12*x4
    x38 = x28*x37
    x39 = x0*x13
    x40 = x10*x12
    x41 = x22*x6
    x42 = a*x41
    x43 = x1*x13 - x40 + x42
    x44 = x12 + x43 - 1
    x45 = x0*x44
    x46 = x13*x3
    x47 = -x23*x6
    x48 = u*x46 + v*x37 + x47
    x49 = x0*x4
    x50 = x10*x4
    x51 = x21*x6
    x52 = a*x51
    x53 = x4*x52
    x54 = -x1*x3 + x50 + x53
    x55 = x3 + x54 - 1
    x56 = -x55
    x57 = x28*x48
    x58 = x4*x57
    x59 = x12*x28
    x60 = x34*x56
    x61 = x1 + x10 + x52
    x62 = x28*x4
    x63 = a*x57
    x64 = x24**(-2.0)
    x65 = x7**(-2.0)
    x66 = x13*x65
    x67 = x64*x66
    x68 = x4*x67
    x69 = 2*a
    x70 = x48*x69
    x71 = x68*x70
    x72 = x26 + x44*x62 - x63 - x71
    x73 = x26*x36
    x74 = x30*x32
    x75 = 2*x12
    x76 = x62*x75
    x77 = -x76
    x78 = x77 + 1
    x79 = 2*x33
    x80 = 2*x0
    x81 = v*x75
    x82 = u**2
    x83 = v**2
    x84 = 2*x3
    x85 = u*x84
    x86 = 2*x4
    x87 = numpy.exp(-x69)
    x88 = x66*x87
    x89 = x48**2
    x90 = -u*x3*x81 - x28*x89 + x37*x83 + x4*x51*x81 + x41*x85 + x46*x82 + x47 - x86*x88
    x91 = x28*x90
    x92 = x13**2
    x93 = x34*x84
    x94 = x4**2
    x95 = x64*x65
    x96 = x12*x94
    x97 = 2*x57
    x98 = a*x83
    x99 = 2*u
    x100 = a*x82
    x101 = 2*x1
    x102 = x64*x89
    x103 = a*x102
    x104 = -x1*x81 - x10*x51*x75 + x100*x13 + x101*x41 + x103*x66 - x12*x98 - x13*x99 - 2*x41 + x42 - x44*x97 + x69*x88 + x81
    x105 = x1*x84
    x106 = x4*x65
    x107 = x106*x69
    x108 = -v*x105 - v*x86 - x100*x3 + x103*x106 - x105*x51 + x107*x87 + x4*x98 + 2*x50*x51 - x51*x86 + x53 + x56*x97 + x85
    x109 = 2*x95
    x110 = x109*x92*numpy.exp(-x101) - 3*x35 + 1
    x111 = x94*numpy.exp(-2*x10)
    x112 = 3*x38
    x113 = 1 - x112
    x114 = x61 - 2
    x115 = x28*x39
    x116 = 2*x56
    x117 = 4*x48
    x118 = x32*x51
    x119 = x32*x65
    x120 = x7**(-3.0)
    x121 = x24**(-3.0)
    x122 = x120*x121*x13
    x123 = x28*x44
    x124 = x56*x67
    x125 = x106*x64
    x126 = 4*x125
    x127 = x75*x94
    x128 = -x127*x67 + x77
    x129 = a**3*x30
    x130 = x27*x75
    return {
        (0, 0, 0): -x0*x17,
        (1, 0, 0): x18*x19,
        (0, 1, 0): x18*x20,
        (1, 1, 0): x27*x31,
        (0, 0, 1): -x0*x18*(-u*x19 - v*x20 + x14*x5*x6/x8**2) + x17*x33,
        (2, 0, 0): -a*x35*x36,
        (0, 2, 0): -a*x38*(1 - x38),
        (1, 0, 1): x29*(x13*x21*x25*x48 - x39 - x45),
        (0, 1, 1): x59*(x0*x56 - x49 + x58),
        (1, 1, 1): x30*(x60 - x61 - x72 + 1),
        (2, 1, 0): x74*(x13*x21*x25*x27*x3 - x36 - x73),
        (1, 2, 0): x74*(-x26*x78 - x78),
        (0, 0, 2): -x0*(x57*x80 + x79*numpy.log(x24) + x91),
        (2, 0, 1): x29*(a*u*x13 + a*x13*x21*x6 + 2*a*x3*x48*x64*x65*x92 - a*x34*x48 - x13 - x29*x92 - x40 - x44*x93),
        (0, 2, 1): x59*(-a*x58 + x55 + x56*x76 - x59*x94 + x70*x95*x96),
        (1, 0, 2): x29*(x0*x104 + x13*x79 - x34*x90 - x39*x97 + x44*x79),
        (0, 1, 2): x59*(x0*x108 + 2*x33*x4 - x4*x91 - x49*x97 - x56*x79),
        (3, 0, 0): x110*x32*x35,
        (0, 3, 0): x32*x38*(x109*x111 + x113),
        (1, 1, 2): x30*(-a*x91 + x0*(2*v*x118 + v*x32*x99 - 4*x1 - 4*x10 + x102*x119 - x107*x44*x48*x64 - x114*x57*x69 - x116*x123 + x118*x99 + x118 + 2*x119*x87 + x122*x32*x86*x89 + x124*x70 + x32*x82 + x32*x83 - 4*x52 + 2) + x104*x62 + x108*x34 + x114*x80 - x115*x116 + x115*x86 - x117*x68 + x28*x45*x86 - x68*x69*x90 + x80 - x97),
        (2, 1, 1): x31*(6*a*x120*x121*x3*x4*x48*x92 + 4*a*x13*x3*x48*x64*x65 - x11 - x114*x93 - x123*x84 - x125*x84*x92 - x126*x44*x46 - x2 + x21*x25*x4*(x43 + x75 - 2) + x26 + 2*x3*x56*x64*x65*x92 + x52 - x60 - x63 - x71 - x93 - 2),
        (1, 2, 1): x31*(a*x117*x37*x95 + 6*a*x122*x48*x96 - x114*x76 + x114 + 4*x124*x37 - x127*x44*x95 + x128 + x28*x56*x75 - x34*(-x54 - x84 + 2) + x72),
        (3, 1, 0): x129*(x110*x26 + x110 - x35*(-x126*x3*x92 + 3*x26 - 4*x35 + 3)),
        (1, 3, 0): x129*(-x112*x78 + x113 + x26*(6*x111*x95 - 6*x38 + 1)),
        (2, 2, 0): x129*(x125*x130*x46 + x130*x29 - x35*(x128 + x27) - x36*x76 + x36 + x73*x78),
    }

def frank_du(u, v, a):
    x0 = numpy.exp(-a*u)
    x1 = (-1 + numpy.exp(-a*v))/(-1 + numpy.exp(-a))
    return x0*x1/(x1*(x0 - 1) + 1)

def gumbel_vals(u, v, a):
    x0 = numpy.log(u)
    x1 = (-x0)**a
    x2 = numpy.log(v)
    x3 = (-x2)**a
    x4 = x1 + x3
    x5 = x4**(a**(-1.0))
    x6 = numpy.exp(-x5)
    x7 = x5*x6/x4
    x8 = x1/(u*x0)
    x9 = x3/(v*x2)
    return {
        (0, 0, 0): x6,
        (1, 0, 0): -x7*x8,
        (0, 1, 0): -x7*x9,
        (1, 1, 0): x5*x6*x8*x9*(a + x5 - 1)/x4**2,
    }

def gumbel_score(u, v, a):
    x0 = numpy.log(u)
    x1 = -x0
    x2 = x1**a
    x3 = numpy.log(v)
    x4 = -x3
    x5 = x4**a
    x6 = x2 + x5
    x7 = a**(-1.0)
    x8 = x6**x7
    x9 = numpy.exp(-x8)
    x10 = u**(-1.0)
    x11 = x0**(-1.0)
    x12 = x11*x8
    x13 = x6**(-1.0)
    x14 = x13*x2
    x15 = x12*x14
    x16 = x15*x9
    x17 = x10*x16
    x18 = v**(-1.0)
    x19 = x8*x9
    x20 = x3**(-1.0)
    x21 = x13*x5
    x22 = x20*x21
    x23 = x18*x19*x22
    x24 = a + x8 - 1
    x25 = x6**(-2.0)
    x26 = x10*x12*x2*x20*x25*x5
    x27 = x18*x9
    x28 = x26*x27
    x29 = a**2
    x30 = numpy.log(x6)
    x31 = numpy.log(x1)
    x32 = numpy.log(x4)
    x33 = x2*x31 + x32*x5
    x34 = x13*x33
    x35 = u**(-2.0)
    x36 = a*x11
    x37 = x11*x14
    x38 = a*x20
    x39 = x21*x38
    x40 = x20 - x38 + 1
    x41 = x8*(x22*x8 - x22 + x39 + x40)
    x42 = x9/v**2
    x43 = x7*(a*x31 + 1)
    x44 = x34 + x7
    x45 = -x43 + x44
    x46 = x30*x7
    x47 = x34 - x46
    x48 = x47*x7
    x49 = x48*x8 - x48
    x50 = x7*(a*x32 + 1)
    x51 = x44 - x50
    x52 = x6**(2*x7)
    x53 = 2*x39
    return {
        (0, 0, 0): x9,
        (1, 0, 0): -x17,
        (0, 1, 0): -x23,
        (1, 1, 0): x24*x28,
        (0, 0, 1): -x19*(x34*x7 - x30/x29),
        (2, 0, 0): x16*x35*(x11 + x14*x36 + x15 - x36 - x37 + 1),
        (0, 2, 0): x22*x41*x42,
        (1, 0, 1): x17*(x45 + x49),
        (0, 1, 1): x23*(x49 + x51),
        (1, 1, 1): x28*(a*x31 + a*x32 - 2*a*x34 + 3*x13*x33 - x43 - x45*x8 - x46 + 3*x47*x7*x8 - x47*x8 - x48*x52 - x48 - x50 - x51*x8 + 2*x7 + 1),
        (2, 1, 0): x12*x2*x20*x25*x27*x35*x5*(3*a*x11*x13*x2 + a*x11*x8 + 3*x11*x13*x2*x8 - 2*x11*x14*x29 + x11*x29 + x11 - x12 - 3*x14*x36*x8 - x24 - 2*x36 - x37*x52 - x37),
        (1, 2, 0): x26*x42*(3*a*x13*x20*x5 - a*(x40 + x53) + 2*x13*x20*x5*x8 + x20 - x22 - x38 - x41 - x53*x8 + 1),
    }

def gumbel_info(u, v, a):
    x0 = numpy.log(u)
    x1 = -x0
    x2 = x1**a
    x3 = numpy.log(v)
    x4 = -x3
    x5 = x4**a
    x6 = x2 + x5
    x7 = a**(-1.0)
    x8 = x6**x7
    x9 = -x8
    x10 = numpy.exp(x9)
    x11 = u**(-1.0)
    x12 = x0**(-1.0)
    x13 = x12*x8
    x14 = x6**(-1.0)
    x15 = x14*x2
    x16 = x13*x15
    x17 = x10*x16
    x18 = x11*x17
    x19 = v**(-1.0)
    x20 = x3**(-1.0)
    x21 = x20*x8
    x22 = x14*x5
    x23 = x21*x22
    x24 = x10*x23
    x25 = x19*x24
    x26 = a - 1
    x27 = x26 + x8
    x28 = x13*x20
    x29 = x6**(-2.0)
    x30 = x2*x29
    x31 = x30*x5
    x32 = x28*x31
    x33 = x11*x32
    x34 = x10*x19
    x35 = x33*x34
    x36 = a**2
    x37 = x36**(-1.0)
    x38 = numpy.log(x6)
    x39 = x37*x38
    x40 = numpy.log(x1)
    x41 = numpy.log(x4)
    x42 = x2*x40 + x41*x5
    x43 = x14*x42
    x44 = x43*x7
    x45 = x10*x8
    x46 = a*x12
    x47 = x12*x15
    x48 = x15*x46
    x49 = x12 - x46 - x47 + x48 + 1
    x50 = x16 + x49
    x51 = u**(-2.0)
    x52 = x17*x51
    x53 = x20*x22
    x54 = -x53
    x55 = a*x20
    x56 = x22*x55
    x57 = 1 - x55
    x58 = x20 + x54 + x56 + x57
    x59 = x23 + x58
    x60 = x59*x8
    x61 = v**(-2.0)
    x62 = x10*x61
    x63 = a*x40
    x64 = x63 + 1
    x65 = x64*x7
    x66 = x43 + x7
    x67 = -x65 + x66
    x68 = x38*x7
    x69 = x43 - x68
    x70 = x69*x7
    x71 = x70*x8
    x72 = -x70 + x71
    x73 = a*x41
    x74 = x73 + 1
    x75 = x7*x74
    x76 = x66 - x75
    x77 = x76*x8
    x78 = 2*x7
    x79 = x69*x8
    x80 = x67*x8
    x81 = 3*x43
    x82 = x6**x78
    x83 = x70*x82
    x84 = 2*a
    x85 = x43*x84
    x86 = -x63 + x65 + x68 + x70 - 3*x71 - x73 - x78 + x79 + x80 - x81 + x83 + x85
    x87 = x12*x36
    x88 = 2*x46
    x89 = x46*x8
    x90 = 3*x15*x46
    x91 = 3*x13
    x92 = x15*x91
    x93 = x15*x87
    x94 = 3*x89
    x95 = -x12 + x47
    x96 = x13 + x15*x94 + x27 + x47*x82 - x87 + x88 - x89 - x90 - x92 + 2*x93 + x95
    x97 = x32*x34
    x98 = x51*x97
    x99 = 2*x55
    x100 = x22*x99
    x101 = x100 + x20
    x102 = x101 + x57
    x103 = 2*x8
    x104 = x55 - 1
    x105 = 3*x55
    x106 = x105*x22
    x107 = -x20 + x53
    x108 = -x106 + x107
    x109 = x33*x62
    x110 = x69**2
    x111 = x110*x7
    x112 = 2*x39
    x113 = x29*x42**2
    x114 = x14*(x2*x40**2 + x41**2*x5)
    x115 = x43*x78
    x116 = x112 - x113 + x114 - x115
    x117 = 2*x47
    x118 = -x117*x64 + x12*x43 + x12*x7 + x30*x42*x88 + x66 - x7*(x12 + x40*x46 - x40*x87 + x64 - x88) + x95
    x119 = x118 - x43*x46
    x120 = -2*x12*x14*x2*x67 - x49*x69*x7
    x121 = 2*x53
    x122 = x20*x7
    x123 = x41*x55
    x124 = x20*x36
    x125 = x124*x41
    x126 = x7*(x123 - x125 + x20 + x74 - x99)
    x127 = x20*x43
    x128 = x121*x74
    x129 = x29*x42*x5
    x130 = x129*x99
    x131 = x107 + x122 - x126 + x127 - x128 + x130 - x43*x55 + x66
    x132 = 2*x70
    x133 = 2*x37
    x134 = x133*x64
    x135 = x40*(x63 + 2)
    x136 = x135*x7
    x137 = 2*x65
    x138 = x137*x43
    x139 = 2*x113 - x114 + x115 + x133
    x140 = -x134 + x136 - x138 + x139
    x141 = x116*x7
    x142 = x110*x37
    x143 = x142*x82
    x144 = -3*x110*x37*x8 - x116*x7*x8 + x141 + x142 + x143
    x145 = x133*x74
    x146 = x41*(x73 + 2)
    x147 = x146*x7
    x148 = 2*x75
    x149 = x148*x43
    x150 = x139 - x145 + x147 - x149
    x151 = u**(-3.0)
    x152 = x0**(-2.0)
    x153 = 2*x152
    x154 = 3*x12
    x155 = x152*x36
    x156 = x1**x84
    x157 = x156*x29
    x158 = x152*x157
    x159 = a*x152
    x160 = x15*x159
    x161 = 3*x152
    x162 = x15*x161
    x163 = x158*x82
    x164 = a*x8
    x165 = 3*x164
    x166 = v**(-3.0)
    x167 = x3**(-2.0)
    x168 = x4**x84
    x169 = x168*x29
    x170 = x167*x169
    x171 = 3*x20
    x172 = x171*x22
    x173 = x172*x8
    x174 = x167*x22
    x175 = 2*x167
    x176 = x167*x36
    x177 = 3*a
    x178 = 6*a
    x179 = -x105 - x167*x177 + x171 + x174*x178 + x175 + x176 + 2
    x180 = -3*a*x167*x168*x29 + x106 - 3*x14*x167*x36*x5 - 3*x14*x167*x5 - 3*x14*x20*x5 + x169*x175*x36 + x170 + x179
    x181 = -3*a*x14*x167*x5*x8 + x165*x170 - 3*x167*x168*x29*x8 + x170*x82 + x173 + 3*x174*x8 + x180
    x182 = 4*x43
    x183 = x6**(3*x7)
    x184 = 2*x67
    x185 = -x64 - x73 + x85
    x186 = 2*x76
    x187 = 6*x70
    x188 = x103*x70
    x189 = x15*x88
    x190 = 4*x79
    x191 = x20*x67
    x192 = x20*x69
    x193 = x55*x67
    x194 = x191*x22
    x195 = 2*x124
    x196 = x172*x69
    x197 = x53*x70
    x198 = 6*x53
    x199 = x53*x82
    x200 = 6*x46
    x201 = a**3
    x202 = x152*x201
    x203 = x155*x8
    x204 = x15*x154
    x205 = 6*x202
    x206 = 11*x157
    x207 = 9*x15
    x208 = 18*x164
    x209 = x12*x20
    x210 = x201*x209
    x211 = x171*x87
    x212 = x21*x87
    x213 = x15*x209
    x214 = x209*x22
    x215 = x209*x31
    x216 = x20*x48
    x217 = 2*x210
    x218 = x20*x31
    x219 = x200*x218
    return {
        (0, 0, 0): x10,
        (1, 0, 0): -x18,
        (0, 1, 0): -x25,
        (1, 1, 0): x27*x35,
        (0, 0, 1): -x45*(-x39 + x44),
        (2, 0, 0): x50*x52,
        (0, 2, 0): x53*x60*x62,
        (1, 0, 1): x18*(x67 + x72),
        (0, 1, 1): x25*(x72 + x76),
        (1, 1, 1): x35*(-x75 - x77 - x86 + 1),
        (2, 1, 0): -x96*x98,
        (1, 2, 0): x109*(-a*x102 - x103*x56 - x104 - x108 + 2*x14*x20*x5*x8 - x60),
        (0, 0, 2): x45*x7*(x110*x7*x8 - x111 - x116),
        (2, 0, 1): x52*(-x117*x80 - x119 + 2*x12*x14*x2*x69*x7*x8 - x120 - x50*x71),
        (0, 2, 1): x24*x61*(-x121*x77 - x131 + 2*x14*x20*x5*x69*x7*x8 + 2*x14*x20*x5*x76 + x58*x69*x7 - x60*x70),
        (1, 0, 2): x18*(-x132*x80 - x140 - x144 + 2*x67*x69*x7),
        (0, 1, 2): x25*(-x132*x77 - x144 - x150 + 2*x69*x7*x76),
        (3, 0, 0): x151*x17*(3*a*x12 + 3*a*x14*x152*x2*x8 + 3*a*x152*x156*x29 + 3*a*x152 + 3*x12*x14*x2 + 3*x14*x152*x2*x36 + 3*x14*x152*x2 + 3*x152*x156*x29*x8 - x153*x157*x36 - x153 - x154 - x155 - x158*x165 - x158 - 6*x160 - x162*x8 - x163 - x90 - x92 - 2),
        (0, 3, 0): -x166*x181*x24,
        (1, 1, 2): x35*(-3*x111*x8 + x111*x82 + x111 + x112 + x113*x178 - 5*x113 - x114*x84 + 3*x114 - x116*x8 - x132*x185 + x132*x76 + x134 + x135 - x136 + x137*x74 - x137 + x138 + x140*x8 + 3*x141*x8 - x141*x82 - x141 + x142*x183 + 7*x142*x8 - x142 - 6*x143 + x145 + x146 - x147 - x148 + x149 + x150*x8 - x182*x64 - x182*x74 + x182 + x184*x70 - x184*x76 + x184*x83 + x185*x188 + x186*x80 + x186*x83 - x187*x77 - x187*x80 - 4*x37 - 6*x44 + x78),
        (2, 1, 1): x98*(a*x119 + 2*a*x12*x14*x2*x67*x8 + a*x12*x14*x2 + 2*a*x12*x14*x42 + a*x12*x74 + a*x14*x42 - x117*x185 - x117*x77 - x117*x83 - x118 + x119*x8 + 2*x12*x14*x185*x2*x8 + 2*x12*x14*x2*x67*x82 + x12*x14*x2*x69*x7*x8*(-a + x164 + x36 + x9) + 4*x12*x14*x2*x69*x7*x8 + 4*x12*x2*x29*x36*x42 - x12*x74 - x120 - x188*x50 - x189*x64 - x189*x67 - x189*x74 - x190*x47 - x26*x47*x69 - x43*x87 - 6*x47*x80 - x49*x69 - x49*x71 - x49*x76 + x50*x69*x7*x82 + x50*x69*x8 + x50*x76*x8 - x74),
        (1, 2, 1): x109*(-x100*x64 - x100*x69 - x100*x76 + x100*x77 + x100*x79 + x101 + x103*x185*x53 + x104 - x121*x185 - x122 - x123 + 6*x124*x129 + x125 + x126 - x127 + x128 - x130 + x131*x8 - x171*x71 - x172*x80 + x183*x197 + x186*x199 + x186*x53 + x190*x20 - x191 - x192*x82 - 2*x192 - x193*x22 + x193 + x194*x82 + x194 - x195*x43 + x196*x82 + x196 - x197 - x198*x77 - x198*x83 - x20*x64 + x20*x70 + x20*x80 + x20*x83 + 7*x23*x70 - 9*x53*x79 + x54 + x55*x64 + x55*x69 - x55*x79 - x55*x80 + x55*x81 - 4*x56*x74 + x56*x80 + x86),
        (3, 1, 0): x151*x97*(x103 - x15*x152*x177*x82 + x15*x152*x208 + 15*x15*x155 - x15*x205 - x152*x207*x8 + x153*x8 - x153 - x154 - x155*x206 - 4*x155 + x157*x205 + x158*x178 + x158*x183 - x158*x208 + 7*x158*x8 - x158 + 5*x159 - 9*x16 - 12*x160 - x161*x164 + x162*x82 + x162 + x163*x178 - 6*x163 + x200 + x202 + x203*x206 - x203*x207 + x203 + x204*x82 + x204 + x207*x89 - 9*x48 + x84 - 3*x87 + x91 + 6*x93 - x94 - 2),
        (1, 3, 0): x10*x166*x33*(3*a*x102*x14*x20*x5*x8 + 3*a*x14*x20*x5*x59*x8 + a*(6*x169*x176 - 6*x176*x22 + x179 + 6*x56) - x102*x106 - x106*x58 - 6*x164*x170 - x172*x60 - x173*x58 - x180 + x181*x8),
        (2, 2, 0): x32*x51*x62*(-x103*x20*x46 + x106*x8 + x108 - x124 - x13*x172 + x15*x200*x21 - x15*x211*x8 - x15*x217 - x16*x171 + x171*x46 - x173*x87 - x173 + x183*x215 + x195*x22 - x199*x46 + x199 + 5*x20*x93 + x200*x23 - x209 - 18*x21*x31*x46 + x21 + 6*x210*x31 + x210 - x211 + 11*x212*x31 + x212 + x213*x82 + x213 + x214*x82 + x214 - 6*x215*x82 - x215 - x216*x82 - 4*x216 - x217*x22 - 11*x218*x87 + x219*x82 + x219 + x28 + 7*x32 - 4*x46*x53 + 5*x53*x87 - x55*x8 + x96 + x99),
    }

def gumbel_du(u, v, a):
    x0 = numpy.log(u)
    x1 = (-x0)**a
    x2 = x1 + (-numpy.log(v))**a
    x3 = x2**(a**(-1.0))
    return -x1*x3*numpy.exp(-x3)/(u*x0*x2)
