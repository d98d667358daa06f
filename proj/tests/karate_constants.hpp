// Frozen reference values for the bundled karate club network, computed by
// an independent brute-force enumeration over data/karate.edges (direct
// adjacency-list walks, no shared code with the library). Flag strings are
// indexed by integer node label minus one.
#pragma once

#include <map>
#include <string>

namespace karate {

inline constexpr int kNodes = 34;
inline constexpr int kEdges = 78;
inline constexpr int kMaxDegree = 17;

inline constexpr double kMeanDegree = 4.588235294117647;
inline constexpr double kFriendMeanDegree = 7.769230769230769;
inline constexpr double kFpGap = 3.1809954751131224;

inline constexpr int kFpTrueCount = 29;
// mean-neighbor-degree paradox per node, label order 1..34
inline constexpr const char* kFpFlags = "0001111111111111111111111111111100";

inline constexpr int kSfpWeakCount = 24;
inline constexpr double kSfpWeakFraction = 24.0 / 34.0;
// weak and strict strong-paradox flags coincide on this network
inline constexpr const char* kSfpWeakFlags = "0000100111111111111111101111111000";
inline constexpr const char* kSfpStrictFlags = kSfpWeakFlags;

// degree -> (holders, nodes) for the weak strong paradox
inline const std::map<int, std::pair<int, int>> kSfpByDegree = {
    {1, {1, 1}},  {2, {11, 11}}, {3, {6, 6}},  {4, {4, 6}},  {5, {2, 3}},
    {6, {0, 2}},  {9, {0, 1}},   {10, {0, 1}}, {12, {0, 1}}, {16, {0, 1}},
    {17, {0, 1}}};

inline constexpr double kAssortativity = -0.47561309768461435;
inline constexpr double kTranssortativity = 0.169347148988532;

// generalized gap with the trait on the two highest-degree nodes (labels 34, 1)
inline constexpr double kGfpTop2 = 0.15271493212669685;

}  // namespace karate
