// Generated by tools/generate_manufactured.py -- do not edit by hand.
#include "shellflow/manufactured.hpp"

#include <cmath>

using std::cos;
using std::pow;
using std::sin;

namespace shellflow {

void manufactured_state(const ManufacturedParams& mp, double r, double th, double ph, double t, double out[5]) {
    const double p0 = mp.p0, gam = mp.gamma, u0 = mp.u0, c0 = mp.c0, cv = mp.cv, mu = mp.mu, Pr = mp.prandtl;
    (void)p0; (void)gam; (void)u0; (void)c0; (void)cv; (void)mu; (void)Pr;
    const double x0 = p0 + pow(u0, 2)*(sin(5*t) + pow(cos(4*ph), 2)*pow(cos(4*th), 2)*pow(cos(M_PI*r), 2) + 1);
    const double x1 = pow(r, 2);
    const double x2 = sin(t) + 1;
    const double x3 = sin(ph);
    const double x4 = pow(x3, 2);
    const double x5 = cos(th);
    const double x6 = u0/c0;
    const double x7 = sin(th);
    out[0] = x0;
    out[1] = u0*(x6*(x4*pow(x5, 3)*sin(x1) + sin(4*t) + 1) + (1.0/2.0)*x2/x1);
    out[2] = u0*(x6*(x2 + pow(x3, 3)*pow(x5, 2)*pow(cos(x1), 3)) + (1.0/2.0)*(cos(3*t + 2) + 1)/x7);
    out[3] = u0*(x6*(x4*pow(x7, 3)*cos(r) + cos(t + 2) + 1) + (1.0/2.0)*sin(t + 6) + 1.0/2.0);
    out[4] = x0/(cv*(gam - 1));
}

void manufactured_source(const ManufacturedParams& mp, double r, double th, double ph, double t, double out[5]) {
    const double p0 = mp.p0, gam = mp.gamma, u0 = mp.u0, c0 = mp.c0, cv = mp.cv, mu = mp.mu, Pr = mp.prandtl;
    (void)p0; (void)gam; (void)u0; (void)c0; (void)cv; (void)mu; (void)Pr;
    const double x0 = 5*t;
    const double x1 = cos(x0);
    const double x2 = M_PI*r;
    const double x3 = cos(x2);
    const double x4 = sin(x2);
    const double x5 = x3*x4;
    const double x6 = 4*ph;
    const double x7 = cos(x6);
    const double x8 = pow(x7, 2);
    const double x9 = 4*th;
    const double x10 = cos(x9);
    const double x11 = pow(x10, 2);
    const double x12 = x11*x8;
    const double x13 = M_PI*x12;
    const double x14 = pow(u0, 2);
    const double x15 = pow(r, 2);
    const double x16 = 1.0/x15;
    const double x17 = sin(t) + 1;
    const double x18 = 4*t;
    const double x19 = sin(x15);
    const double x20 = cos(th);
    const double x21 = pow(x20, 3);
    const double x22 = sin(ph);
    const double x23 = pow(x22, 2);
    const double x24 = x21*x23;
    const double x25 = x19*x24;
    const double x26 = 1.0/c0;
    const double x27 = u0*x26;
    const double x28 = 2*x27;
    const double x29 = x16*x17 + x28*(x25 + sin(x18) + 1);
    const double x30 = x14*x29;
    const double x31 = x13*x30*x5;
    const double x32 = sin(th);
    const double x33 = 1.0/x32;
    const double x34 = 1.0/r;
    const double x35 = t + 6;
    const double x36 = t + 2;
    const double x37 = pow(x32, 3);
    const double x38 = cos(r);
    const double x39 = x23*x38;
    const double x40 = x28*(x37*x39 + cos(x36) + 1) + sin(x35) + 1;
    const double x41 = x34*x40;
    const double x42 = 4*x14;
    const double x43 = sin(x6);
    const double x44 = pow(x3, 2);
    const double x45 = x11*x43*x44*x7;
    const double x46 = x33*x41*x42*x45;
    const double x47 = 3*t + 2;
    const double x48 = cos(x47) + 1;
    const double x49 = x33*x48;
    const double x50 = pow(x20, 2);
    const double x51 = cos(x15);
    const double x52 = pow(x51, 3);
    const double x53 = pow(x22, 3);
    const double x54 = x52*x53;
    const double x55 = x50*x54;
    const double x56 = x28*(x17 + x55) + x49;
    const double x57 = x34*x56;
    const double x58 = sin(x9);
    const double x59 = x10*x58;
    const double x60 = x44*x8;
    const double x61 = x59*x60;
    const double x62 = x42*x57*x61;
    const double x63 = pow(x32, 2);
    const double x64 = 1.0/x63;
    const double x65 = 2*x5;
    const double x66 = 4*x32;
    const double x67 = 4*x34;
    const double x68 = x33*x67;
    const double x69 = mu*x34;
    const double x70 = 2*gam*u0*x69*(16*x11*x34*x44*x64*(pow(x43, 2) - x8) - x13*(-x2*pow(x4, 2) + x2*x44 + x65) - x60*x68*(x11*x66 + x20*x59 - pow(x58, 2)*x66))/Pr;
    const double x71 = p0 + x14*(x12*x44 + sin(x0) + 1);
    const double x72 = x29*x34;
    const double x73 = x27*x66;
    const double x74 = x48*x64 + x54*x73;
    const double x75 = x20*x74;
    const double x76 = x34*x75;
    const double x77 = x20*x33;
    const double x78 = x57*x77;
    const double x79 = x38*x63;
    const double x80 = cos(ph);
    const double x81 = x22*x80;
    const double x82 = x79*x81;
    const double x83 = x27*x67;
    const double x84 = x82*x83;
    const double x85 = 2*x72 - x76 + x78 + x84;
    const double x86 = x17/pow(r, 3);
    const double x87 = 2*x86;
    const double x88 = 4*x27;
    const double x89 = x24*x51;
    const double x90 = x88*x89;
    const double x91 = r*x90;
    const double x92 = -x87 + x91;
    const double x93 = x85 + x92;
    const double x94 = gam - 1;
    const double x95 = sin(r);
    const double x96 = 2*x95;
    const double x97 = x23*x37;
    const double x98 = x27*x97;
    const double x99 = x21*x81;
    const double x100 = x19*x99;
    const double x101 = -x100*x27*x68 + x41 + x96*x98;
    const double x102 = x39*x63;
    const double x103 = 6*x27;
    const double x104 = x103*x23;
    const double x105 = x52*x80;
    const double x106 = x102*x103 + x104*x105*x77 - x33*x40;
    const double x107 = x16*x27;
    const double x108 = x19*x50;
    const double x109 = x108*x32;
    const double x110 = x104*x109;
    const double x111 = pow(x51, 2);
    const double x112 = x27*x53;
    const double x113 = 12*x112;
    const double x114 = x111*x113;
    const double x115 = r*x108;
    const double x116 = x110*x34 + x114*x115 + x57;
    const double x117 = x111*x112;
    const double x118 = 3*x34;
    const double x119 = 3*x50;
    const double x120 = x28*x89;
    const double x121 = -r*x120 + x86;
    const double x122 = 8*x27;
    const double x123 = 2*x34;
    const double x124 = x56*x77;
    const double x125 = x82*x88;
    const double x126 = x34*x79;
    const double x127 = x122*x81;
    const double x128 = x72 + x87 - x91;
    const double x129 = (1.0/12.0)*mu*u0*(x101*x118*(-x100*x33*x88 + x40) + 6*x101*x95*x98 + 18*x102*x106*x107*x50 - x106*x119*x16*x33*(-x104*x105*x20 + x40) + 36*x115*x116*x117 + x116*x118*(x110 + x56) + 4*x121*(-r*x122*x89 + x85 + 4*x86) + x123*(x29 - x75)*(x72 - 2*x76 - x78 - x84 - x92) + x123*(x124 + x125 + x29)*(x126*x127 + x128 + x76 + 2*x78));
    const double x130 = cos(t);
    const double x131 = x50*x57;
    const double x132 = x14*x26;
    const double x133 = (1.0/2.0)*x29;
    const double x134 = pow(x40, 2);
    const double x135 = (1.0/4.0)*u0;
    const double x136 = x17/pow(r, 4);
    const double x137 = 4*x15;
    const double x138 = x34*x77;
    const double x139 = pow(x80, 2);
    const double x140 = -x139 + x23;
    const double x141 = x19*x21;
    const double x142 = x20*x32;
    const double x143 = 8*u0;
    const double x144 = x34*x38;
    const double x145 = x127*x142;
    const double x146 = r*x51;
    const double x147 = 12*x23;
    const double x148 = x23*x34;
    const double x149 = x50*x74;
    const double x150 = x33*x34;
    const double x151 = x49 + x54*x63*x88 - x55*x88 + 2*x48*x50/x37;
    const double x152 = 2*x139;
    const double x153 = x16*x64;
    const double x154 = 1.0/x94;
    out[0] = u0*((1.0/2.0)*gam*x71*x93 + 5*u0*x1 - x129*x94 - x31 - x46 - x62 - x70);
    out[1] = u0*((1.0/6.0)*mu*(x114*x141*x33 - 24*x117*x142*x19 + x121*x67 + x122*x15*x25 + x124*x16 + x125*x16 - 6*x136 + 2*x16*x29 - x16*x75 + x63*x81*x83*x95 - x90) - u0*x121*x133 - u0*x13*x65 + 4*u0*x26*cos(x18) + (1.0/2.0)*x130*x16 - 3.0/2.0*x131*x132*x19*x23*x32 - x135*x34*(x134 + pow(x56, 2)) + x14*x19*x21*x22*x26*x33*x34*x40*x80 - x69*(r*(x120 + 3*x136 - x137*x25*x27) + 6*u0*x19*x20*x23*x26*x34*(-x50 + x63) - x128 - x138*(-x32*x74 + x56) - x140*x141*x28*x34*x64 - x84));
    out[2] = u0*((1.0/6.0)*mu*x34*(12*x109*x148*x27 + x131*x64 - x144*x145 + x146*x147*x27*x32*x50 + x149*x150 - x151*x34 + x57) - 1.0/2.0*mu*(-x103*x153*x22*x50*x52*(-x152 + x23) - x107*x109*x147 - x113*x50*x51*(2*x111*x15 - x137*pow(x19, 2) + 3*x19*x51) - x145*x16*x38 - x153*x56 + x16*x33*(-x149 + x151*x32)) - r*x111*x119*x19*x26*x30*x53 + u0*x130*x26 + (1.0/4.0)*u0*x29*x34*x56 - x134*x135*x138 - x135*x57*x75 + (3.0/2.0)*x14*x23*x26*x33*x34*x40*x50*x52*x80 - x143*x34*x61 - 3.0/2.0*x33*sin(x47));
    out[3] = u0*((1.0/4.0)*u0*x20*x33*x34*x40*x56 + (1.0/4.0)*u0*x29*x34*x40 - x132*x133*x95*x97 + (3.0/2.0)*x14*x20*x23*x26*x34*x38*x56*x63 + x14*x22*x26*x34*x38*x40*x63*x80 - x143*x150*x45 - 1.0/3.0*x27*x33*x69*(x100*x67 - x102*x123 + x105*x118*x24*x33 - 6*x105*x142*x148 + x126*x152 + 4*x146*x99) - x27*sin(x36) - 1.0/2.0*x69*(8*u0*x19*x21*x22*x26*x33*x34*x80 + 12*u0*x21*x23*x26*x34*x52*x64*x80 - x103*x32*x34*x39*(-x119 + x63) - x140*x144*x73 - x28*x97*(r*x38 + x96) - x41*x64) + (1.0/2.0)*cos(x35));
    out[4] = u0*(5*u0*x1*x154 - x129 - x154*x31 - x154*x46 - x154*x62 - x154*x70 + (1.0/2.0)*x71*x93)/cv;
}

void manufactured_conservative_divergence(const ManufacturedParams& mp, double r, double th, double ph, double t, double out[5]) {
    const double p0 = mp.p0, gam = mp.gamma, u0 = mp.u0, c0 = mp.c0, cv = mp.cv, mu = mp.mu, Pr = mp.prandtl;
    (void)p0; (void)gam; (void)u0; (void)c0; (void)cv; (void)mu; (void)Pr;
    const double x0 = sin(t) + 1;
    const double x1 = x0/pow(r, 3);
    const double x2 = 1.0/c0;
    const double x3 = u0*x2;
    const double x4 = 2*x3;
    const double x5 = sin(ph);
    const double x6 = pow(x5, 2);
    const double x7 = cos(th);
    const double x8 = pow(x7, 3);
    const double x9 = pow(r, 2);
    const double x10 = cos(x9);
    const double x11 = x10*x8;
    const double x12 = x11*x6;
    const double x13 = r*x12;
    const double x14 = x1 - x13*x4;
    const double x15 = sin(th);
    const double x16 = pow(x15, 2);
    const double x17 = 1.0/x16;
    const double x18 = 3*t + 2;
    const double x19 = cos(x18) + 1;
    const double x20 = pow(x10, 3);
    const double x21 = pow(x5, 3);
    const double x22 = x20*x21;
    const double x23 = 4*x3;
    const double x24 = x22*x23;
    const double x25 = x15*x24 + x17*x19;
    const double x26 = 1.0/x15;
    const double x27 = x19*x26;
    const double x28 = pow(x7, 2);
    const double x29 = x22*x28;
    const double x30 = x27 + x4*(x0 + x29);
    const double x31 = x26*x7;
    const double x32 = cos(ph);
    const double x33 = x32*x5;
    const double x34 = cos(r);
    const double x35 = x16*x34;
    const double x36 = x33*x35;
    const double x37 = 1.0/x9;
    const double x38 = 4*t;
    const double x39 = sin(x9);
    const double x40 = x39*x8;
    const double x41 = x40*x6;
    const double x42 = x0*x37 + x4*(x41 + sin(x38) + 1);
    const double x43 = 1.0/r;
    const double x44 = u0*x43;
    const double x45 = cos(t);
    const double x46 = pow(u0, 2);
    const double x47 = cos(x38);
    const double x48 = t + 6;
    const double x49 = t + 2;
    const double x50 = pow(x15, 3);
    const double x51 = x34*x50;
    const double x52 = x51*x6;
    const double x53 = x4*(x52 + cos(x49) + 1) + sin(x48) + 1;
    const double x54 = u0*x53;
    const double x55 = x33*x40;
    const double x56 = u0*x42;
    const double x57 = x33*x51;
    const double x58 = sin(r);
    const double x59 = x50*x58;
    const double x60 = x33*x43;
    const double x61 = x26*x43;
    const double x62 = pow(x32, 2);
    const double x63 = x33*x59 - x40*x61*x62 + x41*x61 + x51*x60;
    const double x64 = 2*mu;
    const double x65 = 6*x39;
    const double x66 = x2*x46;
    const double x67 = x15*x66;
    const double x68 = 12*x6;
    const double x69 = x2*x44;
    const double x70 = x16*x69;
    const double x71 = x28*x6;
    const double x72 = x65*x71;
    const double x73 = x69*x72;
    const double x74 = x15*x3;
    const double x75 = pow(x10, 2)*x21;
    const double x76 = x39*x75;
    const double x77 = 24*x74*x76;
    const double x78 = x25*x43;
    const double x79 = r*x77 + x39*x68*x70 - x73 + x78;
    const double x80 = x15*x73;
    const double x81 = 12*x3;
    const double x82 = r*x28;
    const double x83 = x76*x82;
    const double x84 = x30*x43;
    const double x85 = x80 + x81*x83 + x84;
    const double x86 = x30*x56 + x64*x85;
    const double x87 = pow(x30, 2)*x46;
    const double x88 = 3*x87;
    const double x89 = 5*t;
    const double x90 = 4*ph;
    const double x91 = cos(x90);
    const double x92 = pow(x91, 2);
    const double x93 = 4*th;
    const double x94 = cos(x93);
    const double x95 = pow(x94, 2);
    const double x96 = M_PI*r;
    const double x97 = cos(x96);
    const double x98 = pow(x97, 2);
    const double x99 = x95*x98;
    const double x100 = x92*x99;
    const double x101 = x46*(x100 + sin(x89) + 1);
    const double x102 = x42*x43;
    const double x103 = 2*x1;
    const double x104 = x7*x78;
    const double x105 = x13*x23;
    const double x106 = x31*x84;
    const double x107 = 4*x35;
    const double x108 = x107*x33;
    const double x109 = x106 + x108*x69;
    const double x110 = -x102 - x103 + 2*x104 + x105 + x109;
    const double x111 = mu*u0;
    const double x112 = 4*x111;
    const double x113 = x46*pow(x53, 2);
    const double x114 = 8*x69;
    const double x115 = x102 + x103 + x104 - x105 + 2*x106 + x114*x36;
    const double x116 = -x112*x115 + 3*x113;
    const double x117 = (1.0/12.0)*x43;
    const double x118 = pow(x42, 2)*x46;
    const double x119 = sin(x96);
    const double x120 = x92*x95;
    const double x121 = M_PI*x119*x120*x97;
    const double x122 = -x14;
    const double x123 = 3*u0;
    const double x124 = 8*x3;
    const double x125 = x12*x124;
    const double x126 = x3*x9;
    const double x127 = 2*x42;
    const double x128 = x25*x7;
    const double x129 = x30*x37;
    const double x130 = mu*(x108*x3*x37 - 4*x122*x43 + x125 - 16*x126*x41 + x127*x37 - x128*x37 + x129*x31 + x26*x40*x75*x81 + 4*x33*x58*x70 - x7*x77 + 12*x0/pow(r, 4));
    const double x131 = -r*x125 + 4*x1 + 2*x102 - x104 + x109;
    const double x132 = 12*p0 + 12*x101;
    const double x133 = x26*sin(x18);
    const double x134 = 3*x54;
    const double x135 = x20*x28;
    const double x136 = 2*u0;
    const double x137 = x30*x32;
    const double x138 = x20*x31;
    const double x139 = 3*x6;
    const double x140 = 6*x138;
    const double x141 = x107*x32 - x138*x139 + x140*x62;
    const double x142 = x43*x64;
    const double x143 = x142*x7;
    const double x144 = x42*x66;
    const double x145 = u0*x122;
    const double x146 = 12*x10*x71*x74;
    const double x147 = 6*x3;
    const double x148 = x147*x6;
    const double x149 = x148*x28;
    const double x150 = mu*(48*x10*x126*x21*x28*pow(x39, 2) - 24*x126*x29 + x129 - x146 + x149*x15*x37*x39);
    const double x151 = -x110;
    const double x152 = sin(x93);
    const double x153 = x92*x98;
    const double x154 = x152*x153*x94;
    const double x155 = x128*x30;
    const double x156 = x15*x34;
    const double x157 = x17*x28;
    const double x158 = 2*x43;
    const double x159 = r*x146 - x114*x156*x33*x7 + x157*x84 + x158*(x16*x24 + 2*x19*x28/x50 - x23*x29 + x27) + x26*x28*x78 - x80 + x84;
    const double x160 = cos(x48);
    const double x161 = x3*sin(x49);
    const double x162 = x59*x6;
    const double x163 = x43*x53;
    const double x164 = -4*u0*x2*x26*x32*x39*x43*x5*x8 + x162*x4 + x163;
    const double x165 = -x164;
    const double x166 = x165*x64 - x53*x56;
    const double x167 = (1.0/4.0)*x43;
    const double x168 = x140*x3*x32*x6 + x148*x35 - x26*x53;
    const double x169 = x7*(x143*x168 - x30*x54);
    const double x170 = sin(x90);
    const double x171 = x170*x91*x99;
    const double x172 = x3*x53;
    const double x173 = x158*x35;
    const double x174 = x11*x33;
    const double x175 = x20*x32;
    const double x176 = x175*x7;
    const double x177 = x175*x8;
    const double x178 = -2*r*x174 + x139*x15*x176*x43 + x139*x177*x61 - x173*x6 + x173*x62 + x40*x60;
    const double x179 = x26*x44;
    const double x180 = mu*(x124*x174*x26 + 2*x162*x69 - x23*x26*x37*x55 + x37*x53 - x4*x52);
    const double x181 = -x147*x52 - x148*x17*x177 + x149*x156 + x157*x53 - x176*x3*x68 + x53;
    const double x182 = 1.0/(gam - 1);
    const double x183 = u0*x30;
    const double x184 = 1.0/Pr;
    const double x185 = gam*x182*x184;
    const double x186 = x100*x185;
    const double x187 = mu*x186;
    const double x188 = 12*mu;
    const double x189 = x3*x55;
    const double x190 = x188*x56;
    const double x191 = 24*p0 + 24*x101 + 3*x113 + 3*x118 + 24*x182*(p0 + x101) + 3*x87;
    const double x192 = 16*x171;
    const double x193 = x165*x188;
    const double x194 = 12*x85;
    const double x195 = x111*x30;
    const double x196 = -8*mu*x131;
    const double x197 = 48*pow(M_PI, 2)*x111;
    const double x198 = 72*mu*x85;
    const double x199 = 4*x121;
    const double x200 = 6*x46;
    const double x201 = mu*x185;
    const double x202 = 1536*x44;
    const double x203 = 32*x154;
    out[0] = x44*(-r*x14 + (1.0/2.0)*x31*(-x15*x25 + x30) + x36*x4 + x42);
    out[1] = (1.0/2.0)*u0*x37*x45 - x117*(24*p0 + 24*x101 + x110*x112 + x116 + x88) + x2*x26*x43*x46*(x54*x55 + x56*x57 + x63*x64) + 4*x2*x46*x47 - 1.0/4.0*x31*x44*(x15*(x25*x56 + x30*x6*x65*x67*x7 + x64*x79) - x86) - 1.0/6.0*x43*(2*r*u0*(6*u0*x121 - x122*x123*x42 + x130) - x112*x131 - 3*x118 - x132);
    out[2] = -3.0/2.0*u0*x133 + (1.0/4.0)*u0*x43*x86 - x117*x26*(x136*x15*(48*u0*x154 + x123*x155 + x159*x64) - x7*(-x112*x151 + x132 + x88)) - x117*x31*(x116 + x132) + (1.0/2.0)*x2*x26*x43*x46*x5*(x134*x135*x33 + x136*x137*x51 - x141*x143) + x2*x45*x46 - 1.0/2.0*x44*(r*(x144*x65*x75*x82 - x145*x30 + x150) - x86);
    out[3] = u0*((1.0/2.0)*x160 - x161 - x166*x167 - x167*x169*x26 - 2.0/3.0*x179*(12*x171 - 3*x172*x57 + x178*x2*x64) + (1.0/4.0)*x26*x43*(x15*(-x128*x54 - x142*x181 + 6*x16*x2*x30*x34*x46*x6*x7) - x169) - 1.0/2.0*x43*(r*(x144*x162 - x145*x53 + x180) + x166));
    out[4] = u0*(5*u0*x182*cos(x89) + (1.0/4.0)*u0*x42*(x124*x47 + x37*x45) + (1.0/4.0)*u0*x53*(x160 - 2*x161) - 1.0/12.0*x179*(384*gam*mu*pow(x170, 2)*x182*x184*x26*x43*x95*x98 + 8*mu*u0*x115*x2*x32*x34*x5*x50 + 6*mu*u0*x141*x2*x30*x43*x5*x7 + 18*mu*u0*x168*x2*x20*x32*x43*x6*x8 + 8*mu*u0*x178*x2*x53 - x134*(x127*x189 + x135*x137*x139*x3 - x182*x192 - x192 + x4*x53*x57) - x164*x188*x189 - 384*x187*x61 - x190*x2*x63 - x191*x2*x57) - 1.0/4.0*x183*(3*x133 - x4*x45) - 1.0/24.0*x43*(r*(pow(x119, 2)*x120*x185*x197 - x122*x191 + 4*x130*x56 + x145*x196 + 6*x150*x183 - x162*x193*x66 + 6*x180*x54 - x186*x197 + x198*x66*x83 - x200*x42*(x122*x42 - x147*x30*x83 - x162*x172 - x182*x199 - x199)) - 96*x111*x121*x185 - x191*x42 + x193*x54 - x194*x195 + x196*x56) - 1.0/48.0*x61*(x15*(72*mu*x168*x35*x43*x66*x71 - 8*x111*x128*x151 + 12*x111*x163*x181 + x128*x191 + pow(x152, 2)*x153*x201*x202 + 8*x159*x195 - x187*x202 + x190*x7*x79 + x198*x39*x67*x71 - x200*x30*(6*u0*x16*x2*x34*x53*x6*x7 - x15*x2*x56*x72 - x155 - x182*x203 - x203)) + x7*(8*mu*u0*x151*x30 + 12*mu*u0*x168*x43*x53*x7 - mu*x194*x56 - 384*x154*x201*x44 - x191*x30)));
}

} // namespace shellflow
