#ifndef GASPROVE_TESTS_GOLDEN_HPP
#define GASPROVE_TESTS_GOLDEN_HPP

namespace gasprove::golden {

/// Contraction polynomial of (4+x0)/(1+x1) at xbar = 2, K = 5.
inline constexpr const char* running_example_k5 =
    "25*x1^8*x0^4+340*x1^8*x0^3+1606*x1^8*x0^2+3060*x1^8*x0+2025*x1^8+60*x1^7*x0^5+1158*x1^7*x0^4"
    "+8460*x1^7*x0^3+28936*x1^7*x0^2+45848*x1^7*x0+27090*x1^7+71*x1^6*x0^6+1418*x1^6*x0^5"
    "+11229*x1^6*x0^4+53362*x1^6*x0^3+147345*x1^6*x0^2+207144*x1^6*x0+113103*x1^6+72*x1^5*x0^7"
    "+1420*x1^5*x0^6+9012*x1^5*x0^5+20174*x1^5*x0^4+24716*x1^5*x0^3+74718*x1^5*x0^2+163032*x1^5*x0"
    "+108952*x1^5+47*x1^4*x0^8+1276*x1^4*x0^7+11120*x1^4*x0^6+25528*x1^4*x0^5-118780*x1^4*x0^4"
    "-688300*x1^4*x0^3-1195361*x1^4*x0^2-790736*x1^4*x0-148969*x1^4+12*x1^3*x0^9+538*x1^3*x0^8"
    "+7854*x1^3*x0^7+45864*x1^3*x0^6+53604*x1^3*x0^5-515564*x1^3*x0^4-2066454*x1^3*x0^3"
    "-2469564*x1^3*x0^2-207576*x1^3*x0+833882*x1^3+x1^2*x0^10+86*x1^2*x0^9+2109*x1^2*x0^8"
    "+22070*x1^2*x0^7+102117*x1^2*x0^6+105526*x1^2*x0^5-695269*x1^2*x0^4-1867364*x1^2*x0^3"
    "+785343*x1^2*x0^2+6256056*x1^2*x0+4716817*x1^2+4*x1*x0^10+198*x1*x0^9+3530*x1*x0^8+29636*x1*x0^7"
    "+117218*x1*x0^6+136288*x1*x0^5-289440*x1*x0^4+253318*x1*x0^3+5674806*x1*x0^2+11634024*x1*x0"
    "+7054300*x1+4*x0^10+148*x0^9+2145*x0^8+15348*x0^7+53870*x0^6+69340*x0^5+30579*x0^4+801874*x0^3"
    "+3802411*x0^2+6262908*x0+3488704";

inline constexpr const char* example1 = "x0^2-x0*x1+x1^2";
inline constexpr const char* example1_ne = "x0^2-x0*x1+x1^2+x0+x1+1";
inline constexpr const char* example1_nw = "x0^2*x1^2+2*x0^2*x1+2*x0*x1^2+x0^2+3*x0*x1+x1^2+x0+x1+1";

inline constexpr const char* example2 = "x0^4*x1-5*x0^3*x1+10*x0^2*x1+x0^2+x1";
inline constexpr const char* example2_ne = "x0^4*x1+x0^4-x0^3*x1-x0^3+x0^2*x1+2*x0^2+9*x0*x1+11*x0+7*x1+8";
inline constexpr const char* example2_sw = "x0^4+4*x0^3+x0^2*x1+17*x0^2+2*x0*x1+21*x0+x1+8";
inline constexpr const char* example2_nw =
    "x0^4*x1+x0^4+4*x0^3*x1+4*x0^3+16*x0^2*x1+17*x0^2+19*x0*x1+21*x0+7*x1+8";
inline constexpr const char* example2_se = "x0^4-x0^3+x0^2*x1+2*x0^2+2*x0*x1+11*x0+x1+8";
inline constexpr const char* example2_fin_se = "x0^4*x1+10*x0^2*x1+x0^2-5*x0*x1+x1";
inline constexpr const char* example2_fin_ne = "8*x0^4*x1+7*x0^4+11*x0^3*x1+9*x0^3+2*x0^2*x1+x0^2-x0*x1-x0+x1+1";

inline constexpr const char* example2_se_boxes[] = {
    "x0^4+3*x0^3+x0^2*x1+6*x0^2+4*x0*x1+20*x0+4*x1+25",
    "1/2*x0^4*x1+2*x0^4+3/2*x0^3*x1+6*x0^3+3*x0^2*x1+10*x0^2+10*x0*x1+32*x0+25/2*x1+42",
    "1/4*x0^4*x1+25/16*x0^4+3*x0^3*x1+20*x0^3+13*x0^2*x1+96*x0^2+24*x0*x1+196*x0+16*x1+144",
    "25/32*x0^4*x1+21/8*x0^4+10*x0^3*x1+34*x0^3+48*x0^2*x1+166*x0^2+98*x0*x1+344*x0+72*x1+256",
};

inline constexpr const char* example2_ne_boxes[] = {
    "x0^4*x1+3*x0^4+7*x0^3*x1+21*x0^3+19*x0^2*x1+58*x0^2+33*x0*x1+105*x0+37*x1+120",
    "3/2*x0^4*x1+4*x0^4+21/2*x0^3*x1+28*x0^3+29*x0^2*x1+78*x0^2+105/2*x0*x1+144*x0+60*x1+166",
    "37/16*x0^4*x1+15/2*x0^4+115/4*x0^3*x1+375/4*x0^3+142*x0^2*x1+463*x0^2+320*x0*x1+1040*x0+272*x1+880",
    "15/4*x0^4*x1+83/8*x0^4+375/8*x0^3*x1+130*x0^3+463/2*x0^2*x1+642*x0^2+520*x0*x1+1440*x0+440*x1+1216",
};

} // namespace gasprove::golden

#endif // GASPROVE_TESTS_GOLDEN_HPP
