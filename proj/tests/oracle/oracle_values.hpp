// GENERATED by tests/oracle/gen_oracle.py -- do not edit by hand.
// Frozen multiprecision reference values (mpmath, 50 digits).
#pragma once

namespace lcft::oracle {

struct DoubleGammaOracle { double gamma, x_re, x_im, val_re, val_im; };
inline constexpr DoubleGammaOracle kDoubleGammaOracle[] = {
    {0.7, 0.50000000000000000, 0.0, 1.0724229752015259, 0.0},
    {0.7, 1.2000000000000000, 0.0, 0.73474252180744063, 0.0},
    {0.7, 0.80000000000000000, 0.30000000000000000, 0.61883146761319480, -0.088496085079765749},
    {0.7, 0.45000000000000000, -1.1000000000000000, 0.076798156681852536, 0.042889326049893928},
    {0.7, 2.1000000000000000, 0.0, 1.7801180856789711, 0.0},
    {0.7, 1.9000000000000000, 0.90000000000000000, 0.40316188466564145, 1.1114980960202866},
    {0.7, 0.25000000000000000, 0.15000000000000000, 1.5235052933585888, -1.3485030330750439},
    {1.1, 0.50000000000000000, 0.0, 1.0596224225165956, 0.0},
    {1.1, 1.3000000000000000, 0.0, 1.0886960095818916, 0.0},
    {1.1, 0.80000000000000000, 0.30000000000000000, 0.77926888977111738, 5.2897758097442969e-5},
    {1.1, 0.60000000000000000, -0.70000000000000000, 0.42215775084953811, 0.044280802037818951},
    {1.1, 1.9000000000000000, 0.0, 1.9909693410912510, 0.0},
    {1.1, 1.5000000000000000, 1.4000000000000000, -0.31840054636702311, 0.78614605532506015},
    {1.1, 0.30000000000000000, 0.050000000000000000, 1.5665139663850254, -0.24541492209188891},
    {1.7, 0.50000000000000000, 0.0, 1.0479965004330201, 0.0},
    {1.7, 1.0500000000000000, 0.0, 1.0200558112277532, 0.0},
    {1.7, 0.80000000000000000, 0.30000000000000000, 0.83987289604629015, 0.043333498201126931},
    {1.7, 0.90000000000000000, -0.45000000000000000, 0.77820314792174594, -0.15708331499223723},
    {1.7, 1.6000000000000000, 0.0, 1.6228389781888586, 0.0},
    {1.7, 1.2000000000000000, 0.75000000000000000, 0.66541323218788391, 0.56707920041153234},
    {1.7, 0.35000000000000000, -0.20000000000000000, 1.0256228014784602, 0.39335801638010592},
    {1.0, 0.80000000000000000, 0.30000000000000000, 0.75515276573097924, -0.015731429383431739},
};

struct Hyp2f1Oracle { double a_re, a_im, b_re, b_im, c_re, c_im, t, val_re, val_im; };
inline constexpr Hyp2f1Oracle kHyp2f1Oracle[] = {
    {0.37000000000000000, 0.0, 1.2200000000000000, 0.0, 2.4100000000000000, 0.0, 0.70000000000000000, 1.2045346388719739, 0.0},
    {-0.80000000000000000, 0.0, 2.3000000000000000, 0.0, 1.1500000000000000, 0.0, 0.70000000000000000, -0.34042516380362849, 0.0},
    {0.40000000000000000, 0.30000000000000000, 1.1000000000000000, -0.20000000000000000, 1.7000000000000000, 0.10000000000000000, 0.70000000000000000, 1.3725821098117128, 0.18063148402728348},
    {0.37000000000000000, 0.0, 1.2200000000000000, 0.0, 2.4100000000000000, 0.0, -3.5000000000000000, 0.71010961966797448, 0.0},
    {0.40000000000000000, 0.30000000000000000, 1.1000000000000000, -0.20000000000000000, 1.7000000000000000, 0.10000000000000000, -3.5000000000000000, 0.58521897254886242, -0.14192575793427932},
    {0.37000000000000000, 0.0, 1.2200000000000000, 0.0, 2.4100000000000000, 0.0, -0.80000000000000000, 0.88727606151110484, 0.0},
    {0.90000000000000000, 0.0, 0.35000000000000000, 0.0, 1.6100000000000000, 0.0, 0.31000000000000000, 1.0722135307857765, 0.0},
};

// connection matrices at (A,B,C) = (0.3, 0.7, 1.4), row-major
inline constexpr double kConn01[8] = {
    1.5937187123378126, 0.0, 0.85065080835203993, 0.0, -0.85065080835203993, 0.0, 0.17342659034515705, 0.0
};
inline constexpr double kConn0Inf[8] = {
    0.17342659034515705, 0.0, -0.85065080835203993, 0.0, 0.85065080835203993, 0.0, 1.5937187123378126, 0.0
};

struct UnitVolumeOracle { double gamma, value; };
inline constexpr UnitVolumeOracle kUnitVolumeOracle[] = {
    {0.7, 3.5220167746307002},
    {1.7, 1.1171695264776094},
};

// Gamma(2*i*0.8/1.2)
inline constexpr double kGammaImag_re = -0.060512145563712646;
inline constexpr double kGammaImag_im = -0.26041563945822837;

}  // namespace lcft::oracle
