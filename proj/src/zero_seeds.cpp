#include "zqlab/zeta.hpp"

namespace zqlab::zeta {

namespace {

constexpr ZeroSeed kSeeds[] = {
    {1, 14.134725141735},
    {2, 21.022039638772},
    {3, 25.010857580146},
    {4, 30.42487612586},
    {5, 32.935061587739},
    {6, 37.586178158826},
    {7, 40.918719012147},
    {8, 43.327073280915},
    {9, 48.005150881167},
    {10, 49.773832477672},
    {11, 52.970321477714},
    {12, 56.446247697063},
    {13, 59.347044002602},
    {14, 60.83177852461},
    {15, 65.112544048082},
    {16, 67.079810529494},
    {17, 69.546401711174},
    {18, 72.067157674482},
    {19, 75.704690699084},
    {20, 77.144840068875},
    {21, 79.337375020249},
    {22, 82.910380854086},
    {23, 84.735492980517},
    {24, 87.425274613125},
    {25, 88.809111207634},
    {26, 92.491899270558},
    {27, 94.65134404052},
    {28, 95.870634228245},
    {29, 98.831194218194},
    {30, 101.31785100573},
    {31, 103.72553804048},
    {32, 105.44662305233},
    {33, 107.16861118428},
    {34, 111.02953554317},
    {35, 111.87465917699},
    {36, 114.32022091545},
    {37, 116.22668032086},
    {38, 118.79078286598},
    {39, 121.37012500242},
    {40, 122.94682929355},
    {41, 124.25681855435},
    {42, 127.5166838796},
    {43, 129.57870419996},
    {44, 131.08768853093},
    {45, 133.497737203},
    {46, 134.75650975337},
    {47, 138.11604205453},
    {48, 139.73620895212},
    {49, 141.12370740402},
    {50, 143.11184580762},
    {51, 146.00098248677},
    {52, 147.42276534256},
    {53, 150.05352042078},
    {54, 150.92525761224},
    {55, 153.0246938112},
    {56, 156.11290929424},
    {57, 157.59759181759},
    {58, 158.84998817142},
    {59, 161.1889641376},
    {60, 163.03070968718},
    {61, 165.5370691879},
    {62, 167.18443997817},
    {63, 169.09451541557},
    {64, 169.91197647941},
    {65, 173.41153651959},
    {66, 174.75419152337},
    {67, 176.44143429771},
    {68, 178.3774077761},
    {69, 179.91648402026},
    {70, 182.20707848437},
    {71, 184.87446784839},
    {72, 185.59878367771},
    {73, 187.2289225835},
    {74, 189.41615865602},
    {75, 192.02665636071},
    {76, 193.07972660385},
    {77, 195.26539667953},
    {78, 196.87648184096},
    {79, 198.01530967625},
    {80, 201.2647519437},
    {81, 202.49359451414},
    {82, 204.1896718031},
    {83, 205.39469720216},
    {84, 207.90625888781},
    {85, 209.57650971686},
    {86, 211.69086259537},
    {87, 213.34791935971},
    {88, 214.54704478349},
    {89, 216.16953850826},
    {90, 219.06759634902},
    {91, 220.71491883931},
    {92, 221.43070555469},
    {93, 224.0070002546},
    {94, 224.98332466958},
    {95, 227.42144427968},
    {96, 229.33741330553},
    {97, 231.2501887005},
    {98, 231.98723525318},
    {99, 233.69340417891},
    {100, 236.52422966582},
};

}  // namespace

std::span<const ZeroSeed> bundled_zero_seeds() { return kSeeds; }

}  // namespace zqlab::zeta
