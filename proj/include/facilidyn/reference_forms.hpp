#pragma once

// Transcribed closed forms, used only for cross-checks.

#include <array>
#include <cmath>
#include <map>
#include <string>

namespace facilidyn::reference {

// Taylor and transformed terms of the saddle-node reduction at E*.
inline std::map<std::string, double> sn_taylor_terms(double H, double K, double SG, double A1, double XS) {
    std::map<std::string, double> m;
    m["a100"] = SG*XS*(H*K - H*XS - XS)*(A1*K*SG*XS - A1*SG*std::pow(XS, 2) + K)/K;
    m["a001"] = std::pow(SG, 2)*std::pow(XS, 3)*(H - 1)*std::pow(K - XS, 2)/K;
    m["a010"] = XS*(A1*H*K*SG*XS - A1*H*SG*std::pow(XS, 2) - 2*A1*K*SG*XS + 2*A1*SG*std::pow(XS, 2) - K);
    m["a110"] = 2*A1*H*K*SG*XS - 3*A1*H*SG*std::pow(XS, 2) - 2*A1*K*SG*XS + 2*A1*SG*std::pow(XS, 2) - K;
    m["a101"] = std::pow(SG, 2)*std::pow(XS, 2)*(K - XS)*(2*H*K - 3*H*XS - K + XS)/K;
    m["a200"] = SG*(A1*H*std::pow(K, 2)*SG*XS - 4*A1*H*K*SG*std::pow(XS, 2) + 3*A1*H*SG*std::pow(XS, 3) + H*std::pow(K, 2) - 3*H*K*XS - K)/K;
    m["a011"] = SG*std::pow(XS, 2)*(H - 2)*(K - XS);
    m["a020"] = -A1*K*XS;
    m["b100"] = -SG*XS*(H - 1)*(K - XS)*(A1*K*SG*XS - A1*SG*std::pow(XS, 2) + K)/K;
    m["b010"] = -A1*SG*std::pow(XS, 2)*(H - 1)*(K - XS);
    m["b001"] = -std::pow(SG, 2)*std::pow(XS, 3)*(H - 1)*std::pow(K - XS, 2)/K;
    m["b020"] = -A1*K*XS*(H - 1);
    m["b110"] = (1 - H)*(2*A1*K*SG*XS - 2*A1*SG*std::pow(XS, 2) + K);
    m["b101"] = -std::pow(SG, 2)*std::pow(XS, 2)*(H - 1)*std::pow(K - XS, 2)/K;
    m["b011"] = -2*SG*std::pow(XS, 2)*(H - 1)*(K - XS);
    return m;
}
inline std::array<double, 3> sn_reduced_terms(const std::map<std::string, double>& c) {
    const double a100 = c.at("a100");
    [[maybe_unused]] const double a010 = c.at("a010");
    [[maybe_unused]] const double a001 = c.at("a001");
    const double b100 = c.at("b100");
    const double b010 = c.at("b010");
    const double a110 = c.at("a110");
    const double a101 = c.at("a101");
    const double a200 = c.at("a200");
    const double a011 = c.at("a011");
    const double a020 = c.at("a020");
    const double b001 = c.at("b001");
    const double b020 = c.at("b020");
    const double b110 = c.at("b110");
    const double b101 = c.at("b101");
    const double b011 = c.at("b011");
    const double c20 = -b100*(a020*std::pow(b100, 2) - a110*b010*b100 + a200*std::pow(b010, 2) - std::pow(b010, 2)*b110 + b010*b020*b100)/(std::pow(b010, 2)*std::pow(a100 + b010, 2));
    const double c11 = (a011*std::pow(a100, 2)*std::pow(b100, 2) + 2*a011*a100*b010*std::pow(b100, 2) + a011*std::pow(b010, 2)*std::pow(b100, 2) + 2*a020*a100*b001*std::pow(b100, 2) + 2*a020*b001*std::pow(b100, 3) - std::pow(a100, 2)*a101*b010*b100 - std::pow(a100, 2)*std::pow(b010, 2)*b101 + std::pow(a100, 2)*b010*b011*b100 - 2*a100*a101*std::pow(b010, 2)*b100 - 3*a100*a110*b001*b010*b100 + a100*a110*b001*std::pow(b100, 2) + 4*a100*a200*b001*std::pow(b010, 2) - 2*a100*a200*b001*b010*b100 - 3*a100*b001*std::pow(b010, 2)*b110 + 2*a100*b001*b010*b020*b100 + a100*b001*b010*b100*b110 - 2*a100*std::pow(b010, 3)*b101 + 2*a100*std::pow(b010, 2)*b011*b100 - a101*std::pow(b010, 3)*b100 - a110*b001*std::pow(b010, 2)*b100 - a110*b001*b010*std::pow(b100, 2) + 2*a200*b001*std::pow(b010, 3) - b001*std::pow(b010, 3)*b110 - b001*std::pow(b010, 2)*b100*b110 + 2*b001*b010*b020*std::pow(b100, 2) - std::pow(b010, 4)*b101 + std::pow(b010, 3)*b011*b100)/(b010*std::pow(a100 + b010, 4));
    const double c02 = -b001*(a011*std::pow(a100, 3)*std::pow(b100, 2) + 2*a011*std::pow(a100, 2)*b010*std::pow(b100, 2) + a011*std::pow(a100, 2)*std::pow(b100, 3) + a011*a100*std::pow(b010, 2)*std::pow(b100, 2) + 2*a011*a100*b010*std::pow(b100, 3) + a011*std::pow(b010, 2)*std::pow(b100, 3) + 2*a020*std::pow(a100, 2)*b001*std::pow(b100, 2) + 4*a020*a100*b001*std::pow(b100, 3) + 2*a020*b001*std::pow(b100, 4) - 2*std::pow(a100, 3)*a101*b010*b100 + std::pow(a100, 3)*a101*std::pow(b100, 2) - 2*std::pow(a100, 3)*std::pow(b010, 2)*b101 + std::pow(a100, 3)*b010*b011*b100 + std::pow(a100, 3)*b010*b100*b101 - 5*std::pow(a100, 2)*a101*std::pow(b010, 2)*b100 + 2*std::pow(a100, 2)*a101*b010*std::pow(b100, 2) - 3*std::pow(a100, 2)*a110*b001*b010*b100 + std::pow(a100, 2)*a110*b001*std::pow(b100, 2) + 5*std::pow(a100, 2)*a200*b001*std::pow(b010, 2) - 4*std::pow(a100, 2)*a200*b001*b010*b100 + std::pow(a100, 2)*a200*b001*std::pow(b100, 2) - 3*std::pow(a100, 2)*b001*std::pow(b010, 2)*b110 + 2*std::pow(a100, 2)*b001*b010*b020*b100 + std::pow(a100, 2)*b001*b010*b100*b110 - 5*std::pow(a100, 2)*std::pow(b010, 3)*b101 + 2*std::pow(a100, 2)*std::pow(b010, 2)*b011*b100 + 2*std::pow(a100, 2)*std::pow(b010, 2)*b100*b101 + std::pow(a100, 2)*b010*b011*std::pow(b100, 2) - 4*a100*a101*std::pow(b010, 3)*b100 + a100*a101*std::pow(b010, 2)*std::pow(b100, 2) - a100*a110*b001*std::pow(b010, 2)*b100 - 4*a100*a110*b001*b010*std::pow(b100, 2) + a100*a110*b001*std::pow(b100, 3) + 4*a100*a200*b001*std::pow(b010, 3) - a100*b001*std::pow(b010, 3)*b110 - 4*a100*b001*std::pow(b010, 2)*b100*b110 + 4*a100*b001*b010*b020*std::pow(b100, 2) + a100*b001*b010*std::pow(b100, 2)*b110 - 4*a100*std::pow(b010, 4)*b101 + a100*std::pow(b010, 3)*b011*b100 + a100*std::pow(b010, 3)*b100*b101 + 2*a100*std::pow(b010, 2)*b011*std::pow(b100, 2) - a101*std::pow(b010, 4)*b100 - a110*b001*std::pow(b010, 2)*std::pow(b100, 2) - a110*b001*b010*std::pow(b100, 3) + a200*b001*std::pow(b010, 4) + a200*b001*std::pow(b010, 2)*std::pow(b100, 2) - b001*std::pow(b010, 3)*b100*b110 - b001*std::pow(b010, 2)*std::pow(b100, 2)*b110 + 2*b001*b010*b020*std::pow(b100, 3) - std::pow(b010, 5)*b101 + std::pow(b010, 3)*b011*std::pow(b100, 2))/(b100*std::pow(a100 + b010, 6));
    return {c20, c11, c02};
}
// Unfolding derivatives of the cusp normal form, evaluated at sigma = s = sigma2.
inline std::map<std::string, double> bt_mu_terms(double h, double k, double s) {
    std::map<std::string, double> m;
    m["mu110"] = 2*std::pow(k, 3)*std::pow(h - 1, 3)*(k*std::pow(h - 1, 2)*(k*(h - 1)*(std::pow(h, 3) + 3*std::pow(h, 2) - 3*h + 1) + std::pow(h + 1, 3))*(h*k - k + 1) + s*(2*std::pow(h, 4)*std::pow(k, 3)*std::pow(h - 1, 3) + 8*h*k*(h - 1)*std::pow(h + 1, 3) + std::pow(k, 2)*std::pow(h - 1, 2)*(7*std::pow(h, 4) + 12*std::pow(h, 3) + 6*std::pow(h, 2) - 4*h + 1) + 3*std::pow(h + 1, 4)))*std::pow(h*s - h + 1, 3)*(std::pow(h, 2)*k - h*k + h + 1)/((2*h - 2)*std::pow(std::pow(h, 2)*k - 2*h*k + h*s + k + s, 4)*std::pow(-std::pow(h, 3)*k + 2*std::pow(h, 2)*k - std::pow(h, 2) - h*k + h + 2, 2)*(std::pow(h, 3)*k*s - std::pow(h, 2)*k*s + std::pow(h, 2)*k + std::pow(h, 2)*s - 2*h*k + 2*h*s + k + s));
    m["mu101"] = k*(s*(std::pow(h, 4)*k - std::pow(h, 3)*k + std::pow(h, 3) + 6*h - 2) - (h - 1)*(std::pow(h, 3)*k - 5*std::pow(h, 2)*k + std::pow(h, 2) + 6*h*k - 4*h - 2*k + 4))*(-std::pow(h, 3)*k + 2*std::pow(h, 2)*k - std::pow(h, 2) - h*k + h + 2)/(std::pow(h - 1, 2)*(k*std::pow(h - 1, 2)*(h*k - k + 1)*(std::pow(h, 4)*k + 2*std::pow(h, 3)*k + std::pow(h, 3) - 6*std::pow(h, 2)*k + 3*std::pow(h, 2) + 4*h*k + 3*h - k + 1) + s*(2*std::pow(h, 4)*std::pow(k, 3)*std::pow(h - 1, 3) + 8*h*k*(h - 1)*std::pow(h + 1, 3) + std::pow(k, 2)*std::pow(h - 1, 2)*(7*std::pow(h, 4) + 12*std::pow(h, 3) + 6*std::pow(h, 2) - 4*h + 1) + 3*std::pow(h + 1, 4))));
    m["mu201"] = -2*std::pow(h - 1, 2)*(k*std::pow(h - 1, 2)*(2*std::pow(h, 5)*std::pow(k, 4)*std::pow(h - 1, 4) + h*std::pow(k, 3)*std::pow(h - 1, 3)*(18*std::pow(h, 4) + 11*std::pow(h, 3) + 6*std::pow(h, 2) - 4*h + 1) + std::pow(k, 2)*std::pow(h - 1, 2)*(44*std::pow(h, 5) + 74*std::pow(h, 4) + 56*std::pow(h, 3) - 12*std::pow(h, 2) + 2) + k*(h - 1)*(h + 1)*(42*std::pow(h, 4) + 73*std::pow(h, 3) + 45*std::pow(h, 2) - 21*h + 10) + std::pow(h + 1, 4)*(14*h - 4)) + s*(2*std::pow(h, 6)*std::pow(k, 5)*std::pow(h - 1, 5) + std::pow(h, 5)*std::pow(k, 4)*std::pow(h - 1, 4)*(25*h + 19) + h*std::pow(k, 3)*std::pow(h - 1, 3)*(103*std::pow(h, 5) + 183*std::pow(h, 4) + 60*std::pow(h, 3) + 10*std::pow(h, 2) - 5*h + 1) + std::pow(k, 2)*std::pow(h - 1, 2)*(h + 1)*(181*std::pow(h, 5) + 326*std::pow(h, 4) + 114*std::pow(h, 3) + 6*std::pow(h, 2) - 6*h + 2) + k*(h - 1)*std::pow(h + 1, 4)*(143*std::pow(h, 2) - 31*h + 6) + std::pow(h + 1, 5)*(42*h - 12)))*(h*k - k + 1)*(std::pow(h, 2)*k - h*k + h + 1)/(std::pow(s, 2)*(2*h - 2)*(k*std::pow(h - 1, 2) + s*(std::pow(h, 3)*k - std::pow(h, 2)*k + std::pow(h, 2) + 2*h + 1))*std::pow(std::pow(h, 2)*k - 2*h*k + h + k + s - 1, 2)*std::pow(-std::pow(h, 3)*k + 2*std::pow(h, 2)*k - std::pow(h, 2) - h*k + h + 2, 3));
    m["mu210"] = 4*std::pow(k, 2)*std::pow(h - 1, 5)*(k*std::pow(h - 1, 2)*(h*k - k + 1)*(std::pow(h, 7)*std::pow(k, 5)*std::pow(h - 1, 5)*(std::pow(h, 2) - 2*h + 3) + std::pow(h, 6)*std::pow(k, 4)*std::pow(h - 1, 4)*(6*std::pow(h, 3) - std::pow(h, 2) + 3*h + 38) + std::pow(h, 2)*std::pow(k, 3)*std::pow(h - 1, 3)*(14*std::pow(h, 7) + 17*std::pow(h, 6) + 17*std::pow(h, 5) + 180*std::pow(h, 4) + 134*std::pow(h, 3) + 42*std::pow(h, 2) - 14*h + 2) + h*std::pow(k, 2)*std::pow(h - 1, 2)*(h + 1)*(16*std::pow(h, 7) + 21*std::pow(h, 6) + 42*std::pow(h, 5) + 312*std::pow(h, 4) + 254*std::pow(h, 3) + 162*std::pow(h, 2) - 52*h + 8) + k*(h - 1)*(h + 1)*(9*std::pow(h, 8) + 20*std::pow(h, 7) + 52*std::pow(h, 6) + 268*std::pow(h, 5) + 462*std::pow(h, 4) + 384*std::pow(h, 3) + 178*std::pow(h, 2) - 44*h + 8) + std::pow(h + 1, 6)*(2*std::pow(h, 3) - 4*std::pow(h, 2) + 20*h + 8)) + s*(std::pow(h, 8)*std::pow(k, 7)*std::pow(h - 1, 7)*(std::pow(h, 2) - 2*h + 3) + std::pow(h, 7)*std::pow(k, 6)*std::pow(h - 1, 6)*(11*std::pow(h, 3) - 9*std::pow(h, 2) + 14*h + 44) + 2*std::pow(h, 6)*std::pow(k, 5)*std::pow(h - 1, 5)*(23*std::pow(h, 4) + 7*std::pow(h, 3) + 32*std::pow(h, 2) + 159*h + 140) + 2*std::pow(h, 2)*std::pow(k, 4)*std::pow(h - 1, 4)*(50*std::pow(h, 8) + 68*std::pow(h, 7) + 139*std::pow(h, 6) + 589*std::pow(h, 5) + 924*std::pow(h, 4) + 448*std::pow(h, 3) + 28*std::pow(h, 2) - 8*h + 1) + h*std::pow(k, 3)*std::pow(h - 1, 3)*(h + 1)*(125*std::pow(h, 8) + 169*std::pow(h, 7) + 478*std::pow(h, 6) + 1990*std::pow(h, 5) + 3092*std::pow(h, 4) + 1626*std::pow(h, 3) + 236*std::pow(h, 2) - 62*h + 8) + 2*h*k*(h - 1)*std::pow(h + 1, 6)*(18*std::pow(h, 3) - 33*std::pow(h, 2) + 151*h + 76) + std::pow(k, 2)*std::pow(h - 1, 2)*(h + 1)*(91*std::pow(h, 9) + 208*std::pow(h, 8) + 558*std::pow(h, 7) + 2298*std::pow(h, 6) + 4660*std::pow(h, 5) + 4398*std::pow(h, 4) + 1888*std::pow(h, 3) + 306*std::pow(h, 2) - 60*h + 8) + std::pow(h + 1, 7)*(6*std::pow(h, 3) - 12*std::pow(h, 2) + 60*h + 24)))*std::pow(std::pow(h, 2)*k - h*k + h + 1, 3)/((2*h - 2)*(k*std::pow(h - 1, 2) + s*(std::pow(h, 3)*k - std::pow(h, 2)*k + std::pow(h, 2) + 2*h + 1))*std::pow(std::pow(h, 2)*k - 2*h*k + h*s + k + s, 3)*(std::pow(h, 2)*k - 2*h*k + h + k + s - 1)*std::pow(-std::pow(h, 3)*k + 2*std::pow(h, 2)*k - std::pow(h, 2) - h*k + h + 2, 5));
    m["mu120"] = -std::pow(k, 2)*std::pow(h - 1, 2)*(k*std::pow(h - 1, 2)*(h*k - k + 1)*(std::pow(h, 2)*std::pow(k, 3)*std::pow(h - 1, 3)*(std::pow(h, 5) + std::pow(h, 4) - 4*std::pow(h, 3) + 10*std::pow(h, 2) - 5*h + 1) + h*std::pow(k, 2)*std::pow(h - 1, 2)*(h + 1)*(3*std::pow(h, 5) + std::pow(h, 4) - std::pow(h, 3) + 37*std::pow(h, 2) - 18*h + 4) + k*(h - 1)*(h + 1)*(3*std::pow(h, 6) + 2*std::pow(h, 5) + 10*std::pow(h, 4) + 52*std::pow(h, 3) + 41*std::pow(h, 2) - 14*h + 4) + std::pow(h + 1, 4)*(std::pow(h, 3) - 2*std::pow(h, 2) + 10*h + 4)) + s*(2*std::pow(h, 6)*std::pow(k, 5)*std::pow(h - 1, 5)*(std::pow(h, 2) - 2*h + 3) + std::pow(h, 2)*std::pow(k, 4)*std::pow(h - 1, 4)*(11*std::pow(h, 6) - 8*std::pow(h, 5) + 23*std::pow(h, 4) + 44*std::pow(h, 3) + 15*std::pow(h, 2) - 6*h + 1) + h*std::pow(k, 3)*std::pow(h - 1, 3)*(h + 1)*(24*std::pow(h, 6) - 15*std::pow(h, 5) + 78*std::pow(h, 4) + 156*std::pow(h, 3) + 64*std::pow(h, 2) - 23*h + 4) + h*k*(h - 1)*std::pow(h + 1, 4)*(14*std::pow(h, 3) - 25*std::pow(h, 2) + 111*h + 60) + std::pow(k, 2)*std::pow(h - 1, 2)*(h + 1)*(26*std::pow(h, 7) + 9*std::pow(h, 6) + 102*std::pow(h, 5) + 366*std::pow(h, 4) + 344*std::pow(h, 3) + 89*std::pow(h, 2) - 22*h + 4) + std::pow(h + 1, 5)*(3*std::pow(h, 3) - 6*std::pow(h, 2) + 30*h + 12)))*std::pow(h*s - h + 1, 2)/((2*std::pow(h, 2)*k - 2*h*k + 2*h + 2)*std::pow(std::pow(h, 2)*k - 2*h*k + h*s + k + s, 7)*std::pow(-std::pow(h, 3)*k + 2*std::pow(h, 2)*k - std::pow(h, 2) - h*k + h + 2, 2)*std::pow(std::pow(h, 3)*k*s - std::pow(h, 2)*k*s + std::pow(h, 2)*k + std::pow(h, 2)*s - 2*h*k + 2*h*s + k + s, 2));
    m["mu111"] = -1.0/2.0*std::pow(k, 3)*std::pow(h - 1, 3)*(k*std::pow(h - 1, 2)*(h*k - k + 1)*(2*std::pow(h, 7)*std::pow(k, 5)*(h - 6)*std::pow(h - 1, 5) + h*std::pow(k, 4)*std::pow(h - 1, 4)*(11*std::pow(h, 7) - 70*std::pow(h, 6) - 116*std::pow(h, 5) - 5*std::pow(h, 4) + 5*std::pow(h, 3) - 6*std::pow(h, 2) + 4*h - 1) + h*std::pow(k, 3)*std::pow(h - 1, 3)*(24*std::pow(h, 7) - 159*std::pow(h, 6) - 513*std::pow(h, 5) - 386*std::pow(h, 4) - 80*std::pow(h, 3) + std::pow(h, 2) + 31*h - 12) + std::pow(k, 2)*std::pow(h - 1, 2)*(26*std::pow(h, 8) - 177*std::pow(h, 7) - 843*std::pow(h, 6) - 1156*std::pow(h, 5) - 640*std::pow(h, 4) - 107*std::pow(h, 3) + 51*std::pow(h, 2) - 22*h - 2) + k*(h - 1)*std::pow(h + 1, 4)*(14*std::pow(h, 4) - 153*std::pow(h, 3) - 83*std::pow(h, 2) + 20*h - 4) + std::pow(h + 1, 5)*(3*std::pow(h, 3) - 36*std::pow(h, 2) - 15*h + 6)) + s*(2*std::pow(h, 8)*std::pow(k, 7)*(h - 6)*std::pow(h - 1, 7) + 2*std::pow(h, 7)*std::pow(k, 6)*std::pow(h - 1, 6)*(10*std::pow(h, 2) - 61*h - 73) + h*std::pow(k, 5)*std::pow(h - 1, 5)*(79*std::pow(h, 8) - 485*std::pow(h, 7) - 1240*std::pow(h, 6) - 729*std::pow(h, 5) - 10*std::pow(h, 4) + 11*std::pow(h, 3) - 10*std::pow(h, 2) + 5*h - 1) + h*std::pow(k, 4)*std::pow(h - 1, 4)*(165*std::pow(h, 8) - 1014*std::pow(h, 7) - 4058*std::pow(h, 6) - 4580*std::pow(h, 5) - 1782*std::pow(h, 4) - 104*std::pow(h, 3) - 12*std::pow(h, 2) + 36*h - 11) + std::pow(k, 3)*std::pow(h - 1, 3)*(200*std::pow(h, 9) - 1226*std::pow(h, 8) - 6752*std::pow(h, 7) - 11058*std::pow(h, 6) - 7878*std::pow(h, 5) - 2294*std::pow(h, 4) - 154*std::pow(h, 3) + 38*std::pow(h, 2) - 12*h - 2) + std::pow(k, 2)*std::pow(h - 1, 2)*std::pow(h + 1, 4)*(142*std::pow(h, 5) - 1434*std::pow(h, 4) - 1234*std::pow(h, 3) - 12*std::pow(h, 2) + 4*h - 2) + k*(h - 1)*std::pow(h + 1, 5)*(55*std::pow(h, 4) - 608*std::pow(h, 3) - 398*std::pow(h, 2) + 51*h + 2) + std::pow(h + 1, 6)*(9*std::pow(h, 3) - 108*std::pow(h, 2) - 45*h + 18)))*std::pow(h*s - h + 1, 3)/(s*std::pow(std::pow(h, 2)*k - 2*h*k + h*s + k + s, 4)*std::pow(-std::pow(h, 3)*k + 2*std::pow(h, 2)*k - std::pow(h, 2) - h*k + h + 2, 3)*std::pow(std::pow(h, 3)*k*s - std::pow(h, 2)*k*s + std::pow(h, 2)*k + std::pow(h, 2)*s - 2*h*k + 2*h*s + k + s, 2));
    return m;
}

// D31 in ascending powers of h.
inline constexpr long long kD31[] = {-255, 702, 93, 154, 60, -98, 13, 18, 1};
// D41 in ascending powers of h.
inline constexpr long long kD41[] = {14965, -38277, -31623, 17581, 33581, -43339, -21154, 16622, -1655, -5629, -227, 305, 33, 1};
// D51 in ascending powers of h.
inline constexpr long long kD51[] = {-28445, 271188, -957364, 1195888, 675405, -2020738, -857259, 2233144, 325619, -960080, 160771, 298960, 239, -18274, 3051, 1496, -34, 16, 1};
// D61 in ascending powers of h.
inline constexpr long long kD61[] = {605877, -5879673, 21456856, -29330922, -9554651, 44351321, 16372127, -58026517, -1756299, 29927221, -2284869, -14495889, -695287, 4549769, -202967, -1053075, -122354, 43756, 13365, -1901, 10, 6};
// D71 in ascending powers of h.
inline constexpr long long kD71[] = {-7531, 87034, -382169, 621190, 354673, -717148, -8757992, 24860424, -11283238, -32346916, 22852074, 38082396, -29546678, -21638968, 12874736, 6657768, -839519, -521638, -7745, 29614, -2731, -28, 8};

// Brackets [num_lo/den_lo, num_hi/den_hi] around the real roots of D31..D71 in (0, 1).
struct Bracket {
    long long lo_num, lo_den, hi_num, hi_den;
};
inline constexpr Bracket kD31Brackets[] = {{5686495, 16777216, 177703, 524288}};
inline constexpr Bracket kD41Brackets[] = {{5448295, 16777216, 681037, 2097152}};
inline constexpr Bracket kD51Brackets[] = {{3141071, 8388608, 6282143, 16777216},
                                           {4311003, 8388608, 1077751, 2097152},
                                           {6104019, 8388608, 1526005, 2097152}};
inline constexpr Bracket kD61Brackets[] = {{6273181, 16777216, 3136591, 8388608},
                                           {4310379, 8388608, 1077595, 2097152},
                                           {6129165, 8388608, 3064583, 4194304}};
inline constexpr Bracket kD71Brackets[] = {{3160567, 8388608, 6321135, 16777216},
                                           {4283093, 8388608, 2141547, 4194304},
                                           {6960901, 8388608, 3480451, 4194304}};

// Sample h in each of the 13 open subintervals of (0, 1) with the expected sign list of
// the discriminant sequence of the substituted g2.
struct SignRow {
    long long num, den;
    std::array<int, 8> signs;
};
inline constexpr SignRow kG2SignTable[] = {
    {1, 4, {1, -1, 1, 1, 1, -1, -1, 1}},          {33, 100, {1, -1, 1, -1, -1, -1, -1, 1}},
    {35, 100, {1, -1, -1, 1, -1, -1, -1, 1}},     {374, 1000, {1, -1, -1, 1, -1, 1, 1, 1}},
    {3755, 10000, {1, -1, -1, 1, 1, -1, 1, 1}},   {45, 100, {1, -1, -1, 1, 1, -1, -1, 1}},
    {51, 100, {1, -1, -1, 1, 1, -1, -1, 1}},      {5122, 10000, {1, -1, -1, 1, 1, -1, 1, 1}},
    {51387, 100000, {1, -1, -1, 1, 1, 1, -1, 1}}, {6, 10, {1, -1, -1, 1, -1, -1, -1, 1}},
    {729, 1000, {1, -1, -1, 1, 1, 1, -1, 1}},     {78, 100, {1, -1, -1, 1, 1, -1, 1, 1}},
    {9, 10, {1, -1, -1, 1, 1, -1, -1, 1}}};

template <class T>
T ipow(const T& b, int e) {
    T r = b * 0 + 1;
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

// Substituted forms in x with coefficient i standing for x^(2i); T is double or an exact rational.
template <class T>
std::array<T, 5> g2_substituted(const T& h) {
    return {T(4 * (h - 5)), T(12 * h * h * h - 40 * h * h - 54 * h - 66),
            T(ipow(h, 5) + 19 * ipow(h, 4) - 6 * h * h * h - 148 * h * h - 171 * h - 83),
            T((h * h * h + 12 * h * h - 14 * h - 49) * ipow(T(h + 1), 3)),
            T(3 * (h - 2) * (h + 2) * ipow(T(h + 1), 4))};
}
template <class T>
std::array<T, 4> zeta1_substituted(const T& h) {
    return {T(h * 0 + 4), T(2 * (6 * h * h + 8 * h + 5)), T((h + 9) * ipow(T(h + 1), 3)), T(3 * ipow(T(h + 1), 4))};
}

} // namespace facilidyn::reference
