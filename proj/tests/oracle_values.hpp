#pragma once

// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.

#include <complex>

namespace oracle {

using C = std::complex<double>;

struct GammaCase { C z; C lgamma; C gamma; };
inline constexpr GammaCase kGamma[] = {
    {{2.5, 0.0}, {2.8468287047291915963e-1, 0.0}, {1.3293403881791370205, 0.0}},
    {{2.999999999999999889e-1, 1.6999999999999999556}, {-1.8549470665403034933, -1.0991275422423801497}, {7.1091832537680393668e-2, -1.3937742326232289687e-1}},
    {{-2.6000000000000000888, 4.000000000000000222e-1}, {-7.7063281128279626704e-1, -9.2389403280464314113}, {-4.5475296494291551709e-1, -8.5496715541980198658e-2}},
    {{1.225e+1, -8.5}, {1.5266380992199073061e+1, -2.1591781843689577878e+1}, {-3.9310592565689863086e+6, -1.659091571584123442e+6}},
    {{-5.0e-1, -3.0}, {-4.9057622261983900861, 1.4261257331230842915}, {1.0673793768183471041e-3, 7.3264534136132732039e-3}},
    {{1.0000000000000000208e-3, 2.0000000000000000416e-3}, {6.1024566441047244683, -1.1082998584608746549}, {1.994237761027389248e+2, -3.9999802551986556613e+2}},
};

struct Hyp2F1Case { C a, b, c, x, value; };
inline constexpr Hyp2F1Case kHyp2F1[] = {
    {{1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {5.0e-1, 0.0}, {1.3862943611198906188, 0.0}},
    {{2.999999999999999889e-1, 2.000000000000000111e-1}, {-1.1000000000000000888, 5.0e-1}, {2.2000000000000001776, -2.999999999999999889e-1}, {5.999999999999999778e-1, 2.999999999999999889e-1}, {9.1400611992330095517e-1, -8.8525067610121367555e-2}},
    {{5.0e-1, 0.0}, {1.5, 0.0}, {2.75, 0.0}, {9.4999999999999995559e-1, 0.0}, {1.6617252255742751349, 0.0}},
    {{1.1999999999999999556, 0.0}, {6.9999999999999995559e-1, 0.0}, {1.3999999999999999112, 0.0}, {-8.0000000000000004441e-1, 0.0}, {6.9978984530150912983e-1, 0.0}},
    {{2.5e-1, 5.0e-1}, {4.000000000000000222e-1, -5.0e-1}, {2.2999999999999998224, 0.0}, {1.0, 0.0}, {1.2540827423137286271, 5.9786793411565942842e-2}},
};

struct Hyp4F3Case { C a[4]; C b[3]; C value; };
inline constexpr Hyp4F3Case kHyp4F3[] = {
    {{{-3.0, 0.0}, {4.000000000000000222e-1, 2.999999999999999889e-1}, {1.6999999999999999556, 0.0}, {-2.000000000000000111e-1, 1.1000000000000000888}}, {{2.5, 0.0}, {1.1000000000000000888, -4.000000000000000222e-1}, {3.2999999999999998224, 0.0}}, {1.243033659204606568, -1.4964084123581344708e-1}},
    {{{-5.0, 0.0}, {2.25, 0.0}, {5.0e-1, 0.0}, {1.5, 0.0}}, {{3.5, 0.0}, {1.75, 0.0}, {2.5e-1, 0.0}}, {-4.0246025978142831541e-1, 0.0}},
};

struct WeightCase { C z, zp; double a, b; int N, x; double value; };
inline constexpr WeightCase kWeight[] = {
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 1, 0, 3.3783872007867156829e-1},
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 1, 1, 2.0270323204720294098e-1},
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 1, 4, 3.7184156545286096547e-4},
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 1, 17, 2.697021511089213017e-8},
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 3, 0, 3.9745731773961360976e-5},
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 3, 1, 4.5860459739186185741e-5},
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 3, 4, 1.144127893701110663e-8},
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 3, 17, 3.417772122394804231e-18},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 1, 0, 9.8776348754295233366e-2},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 1, 1, 3.7572585111743932505e-2},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 1, 4, 3.7496866233409931706e-5},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 1, 17, 5.9303895547316668384e-9},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 0, 1.1673205297099490745e-5},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 1, 1.5289494622010093573e-5},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 4, 9.274442609291404886e-10},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 17, 6.3976917149481710848e-19},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 1, 0, 9.5949642692844341393e-2},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 1, 1, 1.2791623363157264942e-2},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 1, 4, 2.0091613848716332917e-6},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 1, 17, 5.1751816027450703488e-10},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 0, 2.217448973124865637e-5},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 1, 2.2830539723297435673e-5},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 4, 5.2863167927161508841e-11},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 17, 5.547978514101305784e-20},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 1, 0, 6.3043890614075374206e-1},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 1, 1, 5.1675320175471619346e-1},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 1, 4, 3.427912663808469149e-4},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 1, 17, 1.0051124974436805964e-8},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 3, 0, 1.2376892341576546712e-4},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 3, 1, 1.5006180351963274351e-4},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 3, 4, 3.2526129274527565303e-8},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 3, 17, 1.5949273066152085532e-18},
};

// Total mass by direct lattice summation.
struct MassCase { C z, zp; double a, b; int N; double value; };
inline constexpr MassCase kMass[] = {
    {{1.0, 1.0}, {1.0, -1.0}, 0.0, 0.0, 1, 5.6306453346445261382e-1},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 1, 1.3835840773533223686e-1},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 1, 1.0884424880119963239e-1},
    {{1.3000000000000000444, 9.000000000000000222e-1}, {1.3000000000000000444, -9.000000000000000222e-1}, -5.0e-1, -5.0e-1, 1, 1.1900598801570108054},
    {{1.6000000000000000888, 5.0e-1}, {1.6000000000000000888, -5.0e-1}, 5.0e-1, 5.0e-1, 2, 9.387325820117136321e-9},
};

struct KernelCase { C z, zp; double a, b; int N, x, y; double value; };
inline constexpr KernelCase kKernelO[] = {
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 2, 0, 0, 8.7930254894223805104e-1},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 2, 0, 1, 2.0160554130696582603e-1},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 2, 1, 3, 9.7820624342970672813e-2},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 2, 2, 2, 4.2384476056329431299e-1},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 2, 5, 2, 2.045202177124978426e-2},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 2, 7, 11, 2.9929115921028914868e-5},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 2, 20, 20, 1.6384121902055231592e-7},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 2, 3, 40, 7.6087727776980927162e-6},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 0, 0, 9.3637276612643393705e-1},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 0, 1, 1.0723969915677142022e-1},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 1, 3, -2.5504918415374146112e-1},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 2, 2, 6.7439153609629530155e-1},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 5, 2, 2.7663479083040449631e-2},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 7, 11, 1.7594552789512220814e-4},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 20, 20, 8.4114180328036458444e-7},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 3, 40, 6.3079690582630183719e-5},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 2, 0, 0, 9.6039521025851066466e-1},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 2, 0, 1, 8.1221720919663594979e-2},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 2, 1, 3, 3.4547594872347401107e-2},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 2, 2, 2, 2.0382649593296824109e-1},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 2, 5, 2, 3.7720159880479103009e-3},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 2, 7, 11, 2.4650447895741068911e-6},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 2, 20, 20, 1.82042221400054177e-8},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 2, 3, 40, 7.6469624652468368169e-7},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 0, 0, 9.8145678263663080382e-1},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 0, 1, 3.5818770583102723839e-2},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 1, 3, -2.220380274846593375e-1},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 2, 2, 8.1802006606960786223e-1},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 5, 2, 1.3356318925032173675e-2},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 7, 11, 1.3743082743821330985e-5},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 20, 20, 8.8043491338210399823e-8},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 3, 40, 1.7548075095584802601e-5},
};

struct Rho1Case { double z, zp, a, b; int N, x; double value; };
inline constexpr Rho1Case kDegenerateRho1[] = {
    {3.0, 3.7000000000000001776, 5.0e-1, 5.0e-1, 2, 0, 6.515591190495665345e-1},
    {3.0, 3.7000000000000001776, 5.0e-1, 5.0e-1, 2, 1, 4.7278050466899673593e-1},
    {3.0, 3.7000000000000001776, 5.0e-1, 5.0e-1, 2, 2, 5.7550981489245860623e-1},
    {3.0, 3.7000000000000001776, 5.0e-1, 5.0e-1, 2, 3, 2.7974446368319959129e-1},
    {3.0, 3.7000000000000001776, 5.0e-1, 5.0e-1, 2, 4, 2.0406097705778532048e-2},
    {2.0, 2.5, 0.0, 0.0, 2, 0, 7.2222222222222222222e-1},
    {2.0, 2.5, 0.0, 0.0, 2, 1, 4.97113997113997114e-1},
    {2.0, 2.5, 0.0, 0.0, 2, 2, 6.5295815295815295815e-1},
    {2.0, 2.5, 0.0, 0.0, 2, 3, 1.2770562770562770563e-1},
};

struct PsiCase { C z, zp; double a, b; int N, x; double geq, less; };
inline constexpr PsiCase kPsi[] = {
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 0, 0.0, 1.891762573698350441e+2},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 1, 0.0, 3.6208316435357020439e+2},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 2, 0.0, 2.3742909716162491746e+2},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 3, 1.3463905522975796006e-1, 0.0},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 4, 5.0556071509846312036e-2, 0.0},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 5, 2.1286202001925193168e-2, 0.0},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 6, 1.1510702977090456322e-2, 0.0},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 7, 7.1502535502269837581e-3, 0.0},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 8, 4.8389152103899134961e-3, 0.0},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 9, 3.4708732114229781583e-3, 0.0},
    {{8.0000000000000004441e-1, 5.999999999999999778e-1}, {8.0000000000000004441e-1, -5.999999999999999778e-1}, 5.999999999999999778e-1, 2.000000000000000111e-1, 3, 10, 2.596971887883532352e-3, 0.0},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 0, 0.0, 9.9587107364326481641e+1},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 1, 0.0, 2.4248522642042599174e+2},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 2, 0.0, 2.2129643234941577777e+2},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 3, 5.1396914863218687883e-2, 0.0},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 4, 2.8816331186147502555e-3, 0.0},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 5, 1.1851734346104004122e-3, 0.0},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 6, 6.7361611372186257571e-4, 0.0},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 7, 4.4148926412228034401e-4, 0.0},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 8, 3.1393038551765901176e-4, 0.0},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 9, 2.3545980232082261696e-4, 0.0},
    {{4.000000000000000222e-1, 0.0}, {9.000000000000000222e-1, 0.0}, 5.0e-1, 2.999999999999999889e-1, 3, 10, 1.8342840154301811204e-4, 0.0},
};

struct ContinuumCase { C z, zp; double a, b; double x, y; double value; };
inline constexpr ContinuumCase kKernelPIntro[] = {
    {{4.000000000000000222e-1, 6.9999999999999995559e-1}, {4.000000000000000222e-1, -6.9999999999999995559e-1}, 2.5e-1, -2.5e-1, 1.5, 2.0, 1.5655709205706753475e-1},
    {{4.000000000000000222e-1, 6.9999999999999995559e-1}, {4.000000000000000222e-1, -6.9999999999999995559e-1}, 2.5e-1, -2.5e-1, 2.25, 2.25, 5.5931975709806004745e-2},
    {{4.000000000000000222e-1, 6.9999999999999995559e-1}, {4.000000000000000222e-1, -6.9999999999999995559e-1}, 2.5e-1, -2.5e-1, 4.0, 1.1999999999999999556, 6.9998660909546057225e-2},
    {{4.000000000000000222e-1, 6.9999999999999995559e-1}, {4.000000000000000222e-1, -6.9999999999999995559e-1}, 2.5e-1, -2.5e-1, 1.6e+1, 3.0, 1.338890014467754148e-3},
    {{2.999999999999999889e-1, 0.0}, {5.999999999999999778e-1, 0.0}, 5.0e-1, 1.0000000000000000555e-1, 1.5, 2.0, 1.9716743488952476257e-2},
    {{2.999999999999999889e-1, 0.0}, {5.999999999999999778e-1, 0.0}, 5.0e-1, 1.0000000000000000555e-1, 2.25, 2.25, 6.1846522116579252485e-3},
    {{2.999999999999999889e-1, 0.0}, {5.999999999999999778e-1, 0.0}, 5.0e-1, 1.0000000000000000555e-1, 4.0, 1.1999999999999999556, 1.122931690469414989e-2},
    {{2.999999999999999889e-1, 0.0}, {5.999999999999999778e-1, 0.0}, 5.0e-1, 1.0000000000000000555e-1, 1.6e+1, 3.0, 1.5771384196170020046e-4},
};

struct RacahCase { int y; double alpha, beta, gamma, delta; double value; };
inline constexpr RacahCase kRacah[] = {
    {0, -5.2999999999999998224, 7.2000000000000001776, 5.0e-1, 7.5e-1, -4.5319014364115478393e+1},
    {2, -5.2999999999999998224, 7.2000000000000001776, 5.0e-1, 7.5e-1, -2.6206987123761028795e+2},
    {3, -6.5999999999999996447, 9.0999999999999996447, 1.0000000000000000555e-1, 1.1999999999999999556, -6.5960152542732492362e+4},
    {1, -4.25, 6.5, 0.0, 0.0, -3.3067264967056116508e+3},
};

}  // namespace oracle
