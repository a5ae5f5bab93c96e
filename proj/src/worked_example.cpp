#include "constaclass/worked_example.hpp"

namespace constaclass::worked_example {

namespace {

constexpr FactorRef kFactors[] = {
    {"1+x", 1, "1+x^4+x^8+x^12+x^16+x^20+x^24", "x^3", 21},
    {"1+x+x^3", 3, "1+x^4+x^8+x^16", "1+x+x^2+x^4", 111},
    {"1+x^2+x^3", 3, "1+x^12+x^20+x^24", "1+x^2+x^3+x^4", 111},
};

constexpr BridgeRef kBridge[] = {
    {1, "g00", "1+x^2+x^4+x^6+x^8+x^10+x^12"},
    {1, "h00", "x^2+x^6+x^10"},
    {1, "g02", "0"},
    {1, "h02", "1+x^2+x^4+x^6+x^8+x^10+x^12"},
    {1, "g01", "1+x+x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9+x^10+x^11+x^12+x^13"},
    {1, "h01", "x^2+x^3+x^6+x^7+x^10+x^11"},
    {1, "g03", "0"},
    {1, "h03", "1+x+x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9+x^10+x^11+x^12+x^13"},
    {1, "p1", "1+x+x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9+x^10+x^11+x^12+x^13"},
    {1, "q1", "x+x^2+x^5+x^6+x^9+x^10+x^13"},
    {1, "q2", "x+x^3+x^5+x^7+x^9+x^11+x^13"},
    {1, "q3", "1+x+x^2"},
    {2, "g00", "1+x^2+x^4+x^8"},
    {2, "h00", "x^2"},
    {2, "g01", "1+x+x^2+x^4+x^7+x^8+x^9+x^11"},
    {2, "h01", "x^2+x^3+x^5"},
    {2, "h02", "1+x^2+x^4+x^8"},
    {2, "h03", "1+x+x^2+x^4+x^7+x^8+x^9+x^11"},
    {2, "g10", "x+x^3+x^5+x^9"},
    {2, "h10", "x^3"},
    {2, "g11", "x+x^2+x^3+x^5+x^8+x^9+x^10+x^12"},
    {2, "h11", "x^3+x^4+x^6"},
    {2, "h12", "x+x^3+x^5+x^9"},
    {2, "h13", "x+x^2+x^3+x^5+x^8+x^9+x^10+x^12"},
    {2, "g20", "x^2+x^4+x^6+x^10"},
    {2, "h20", "x^4"},
    {2, "g21", "x^2+x^3+x^4+x^6+x^9+x^10+x^11+x^13"},
    {2, "h21", "x^4+x^5+x^7"},
    {2, "h22", "x^2+x^4+x^6+x^10"},
    {2, "h23", "x^2+x^3+x^4+x^6+x^9+x^10+x^11+x^13"},
    {2, "p1", "1+x+x^2+x^4+x^7+x^8+x^9+x^11"},
    {2, "q1", "x+x^2+x^9"},
    {2, "q2", "1+x+x^3+x^4+x^5+x^9+x^10+x^12"},
    {2, "q3", "x"},
    {3, "g00", "1+x^6+x^10+x^12"},
    {3, "h00", "x^6+x^10"},
    {3, "g01", "x+x^2+x^3+x^6+x^8+x^9+x^10+x^13"},
    {3, "h01", "1+x+x^6+x^8+x^9+x^10+x^12+x^13"},
    {3, "h02", "x^2+x^4+x^6+x^12"},
    {3, "h03", "1+x+x^2+x^5+x^7+x^8+x^9+x^12"},
    {3, "g10", "x+x^7+x^11+x^13"},
    {3, "h10", "x^7+x^11"},
    {3, "g11", "1+x^2+x^3+x^4+x^7+x^9+x^10+x^11"},
    {3, "h11", "x+x^2+x^7+x^9+x^10+x^11+x^13"},
    {3, "h12", "x^3+x^5+x^7+x^13"},
    {3, "h13", "x+x^2+x^3+x^6+x^8+x^9+x^10+x^13"},
    {3, "g20", "1+x^2+x^8+x^12"},
    {3, "h20", "1+x^8+x^12"},
    {3, "g21", "x+x^3+x^4+x^5+x^8+x^10+x^11+x^12"},
    {3, "h21", "1+x^2+x^3+x^8+x^10+x^11+x^12"},
    {3, "h22", "1+x^4+x^6+x^8"},
    {3, "h23", "1+x^2+x^3+x^4+x^7+x^9+x^10+x^11"},
    {3, "p1", "1+x^3+x^5+x^6+x^7+x^10+x^12+x^13"},
    {3, "q1", "x^5+x^6+x^10+x^13"},
    {3, "q2", "1+x+x^5+x^6+x^7+x^9+x^10+x^12"},
    {3, "q3", "1+x^2+x^5+x^7+x^9"},
};

constexpr CodeRef kCodes[] = {
    {"C2 b=(0,0,0)", "S3", false, {"III:k=4", "II-2:b=0", "III:k=4"}, 6, 4},
    {"C2 b=(0,0,1)", "S2", false, {"III:k=4", "II-2:b=x^2", "III:k=4"}, 6, 8},
    {"C2 b=(0,1,0)", "S2", false, {"III:k=4", "II-2:b=x", "III:k=4"}, 6, 8},
    {"C2 b=(0,1,1)", "S2", false, {"III:k=4", "II-2:b=x+x^2", "III:k=4"}, 6, 8},
    {"C2 b=(1,0,0)", "S2", false, {"III:k=4", "II-2:b=1", "III:k=4"}, 6, 8},
    {"C2 b=(1,0,1)", "S2", false, {"III:k=4", "II-2:b=1+x^2", "III:k=4"}, 6, 8},
    {"C2 b=(1,1,0)", "S2", false, {"III:k=4", "II-2:b=1+x", "III:k=4"}, 6, 8},
    {"C2 b=(1,1,1)", "S2", false, {"III:k=4", "II-2:b=1+x+x^2", "III:k=4"}, 6, 8},
    {"C3 c=(0,0,0)", "S1", true, {"III:k=4", "III:k=4", "II-3:c=0"}, 9, 7},
    {"C3 c=(0,0,1)", "S1", true, {"III:k=4", "III:k=4", "II-3:c=x^2"}, 9, 7},
    {"C3 c=(0,1,0)", "S1", true, {"III:k=4", "III:k=4", "II-3:c=x"}, 9, 7},
    {"C3 c=(0,1,1)", "S1", true, {"III:k=4", "III:k=4", "II-3:c=x+x^2"}, 9, 7},
    {"C3 c=(1,0,0)", "S1", true, {"III:k=4", "III:k=4", "II-3:c=1"}, 9, 7},
    {"C3 c=(1,0,1)", "S1", true, {"III:k=4", "III:k=4", "II-3:c=1+x^2"}, 9, 7},
    {"C3 c=(1,1,0)", "S1", true, {"III:k=4", "III:k=4", "II-3:c=1+x"}, 9, 7},
    {"C3 c=(1,1,1)", "S1", true, {"III:k=4", "III:k=4", "II-3:c=1+x+x^2"}, 9, 7},
    {"C2+C3 b=(0,0,0) c=(0,0,0)", "S1", true, {"III:k=4", "II-2:b=0", "II-3:c=0"}, 15, 4},
    {"C2+C3 b=(0,0,0) c=(0,0,1)", "S1", true, {"III:k=4", "II-2:b=0", "II-3:c=x^2"}, 15, 4},
    {"C2+C3 b=(0,0,0) c=(0,1,0)", "S1", true, {"III:k=4", "II-2:b=0", "II-3:c=x"}, 15, 4},
    {"C2+C3 b=(0,0,0) c=(0,1,1)", "S1", true, {"III:k=4", "II-2:b=0", "II-3:c=x+x^2"}, 15, 4},
    {"C2+C3 b=(0,0,0) c=(1,0,0)", "S1", true, {"III:k=4", "II-2:b=0", "II-3:c=1"}, 15, 4},
    {"C2+C3 b=(0,0,0) c=(1,0,1)", "S1", true, {"III:k=4", "II-2:b=0", "II-3:c=1+x^2"}, 15, 4},
    {"C2+C3 b=(0,0,0) c=(1,1,0)", "S1", true, {"III:k=4", "II-2:b=0", "II-3:c=1+x"}, 15, 4},
    {"C2+C3 b=(0,0,0) c=(1,1,1)", "S1", true, {"III:k=4", "II-2:b=0", "II-3:c=1+x+x^2"}, 15, 4},
    {"C2+C3 b=(0,0,1) c=(0,0,0)", "S1", true, {"III:k=4", "II-2:b=x^2", "II-3:c=0"}, 15, 4},
    {"C2+C3 b=(0,0,1) c=(0,0,1)", "S1", true, {"III:k=4", "II-2:b=x^2", "II-3:c=x^2"}, 15, 4},
    {"C2+C3 b=(0,0,1) c=(0,1,0)", "S1", true, {"III:k=4", "II-2:b=x^2", "II-3:c=x"}, 15, 4},
    {"C2+C3 b=(0,0,1) c=(0,1,1)", "S1", true, {"III:k=4", "II-2:b=x^2", "II-3:c=x+x^2"}, 15, 4},
    {"C2+C3 b=(0,0,1) c=(1,0,0)", "S1", true, {"III:k=4", "II-2:b=x^2", "II-3:c=1"}, 15, 4},
    {"C2+C3 b=(0,0,1) c=(1,0,1)", "S1", true, {"III:k=4", "II-2:b=x^2", "II-3:c=1+x^2"}, 15, 4},
    {"C2+C3 b=(0,0,1) c=(1,1,0)", "S1", true, {"III:k=4", "II-2:b=x^2", "II-3:c=1+x"}, 15, 4},
    {"C2+C3 b=(0,0,1) c=(1,1,1)", "S1", true, {"III:k=4", "II-2:b=x^2", "II-3:c=1+x+x^2"}, 15, 4},
    {"C2+C3 b=(0,1,0) c=(0,0,0)", "S1", true, {"III:k=4", "II-2:b=x", "II-3:c=0"}, 15, 4},
    {"C2+C3 b=(0,1,0) c=(0,0,1)", "S1", true, {"III:k=4", "II-2:b=x", "II-3:c=x^2"}, 15, 4},
    {"C2+C3 b=(0,1,0) c=(0,1,0)", "S1", true, {"III:k=4", "II-2:b=x", "II-3:c=x"}, 15, 4},
    {"C2+C3 b=(0,1,0) c=(0,1,1)", "S1", true, {"III:k=4", "II-2:b=x", "II-3:c=x+x^2"}, 15, 4},
    {"C2+C3 b=(0,1,0) c=(1,0,0)", "S1", true, {"III:k=4", "II-2:b=x", "II-3:c=1"}, 15, 4},
    {"C2+C3 b=(0,1,0) c=(1,0,1)", "S1", true, {"III:k=4", "II-2:b=x", "II-3:c=1+x^2"}, 15, 4},
    {"C2+C3 b=(0,1,0) c=(1,1,0)", "S1", true, {"III:k=4", "II-2:b=x", "II-3:c=1+x"}, 15, 4},
    {"C2+C3 b=(0,1,0) c=(1,1,1)", "S1", true, {"III:k=4", "II-2:b=x", "II-3:c=1+x+x^2"}, 15, 4},
    {"C2+C3 b=(0,1,1) c=(0,0,0)", "S1", true, {"III:k=4", "II-2:b=x+x^2", "II-3:c=0"}, 15, 4},
    {"C2+C3 b=(0,1,1) c=(0,0,1)", "S1", true, {"III:k=4", "II-2:b=x+x^2", "II-3:c=x^2"}, 15, 4},
    {"C2+C3 b=(0,1,1) c=(0,1,0)", "S1", true, {"III:k=4", "II-2:b=x+x^2", "II-3:c=x"}, 15, 4},
    {"C2+C3 b=(0,1,1) c=(0,1,1)", "S1", true, {"III:k=4", "II-2:b=x+x^2", "II-3:c=x+x^2"}, 15, 4},
    {"C2+C3 b=(0,1,1) c=(1,0,0)", "S1", true, {"III:k=4", "II-2:b=x+x^2", "II-3:c=1"}, 15, 4},
    {"C2+C3 b=(0,1,1) c=(1,0,1)", "S1", true, {"III:k=4", "II-2:b=x+x^2", "II-3:c=1+x^2"}, 15, 4},
    {"C2+C3 b=(0,1,1) c=(1,1,0)", "S1", true, {"III:k=4", "II-2:b=x+x^2", "II-3:c=1+x"}, 15, 4},
    {"C2+C3 b=(0,1,1) c=(1,1,1)", "S1", true, {"III:k=4", "II-2:b=x+x^2", "II-3:c=1+x+x^2"}, 15, 4},
    {"C2+C3 b=(1,0,0) c=(0,0,0)", "S1", true, {"III:k=4", "II-2:b=1", "II-3:c=0"}, 15, 4},
    {"C2+C3 b=(1,0,0) c=(0,0,1)", "S1", true, {"III:k=4", "II-2:b=1", "II-3:c=x^2"}, 15, 4},
    {"C2+C3 b=(1,0,0) c=(0,1,0)", "S1", true, {"III:k=4", "II-2:b=1", "II-3:c=x"}, 15, 4},
    {"C2+C3 b=(1,0,0) c=(0,1,1)", "S1", true, {"III:k=4", "II-2:b=1", "II-3:c=x+x^2"}, 15, 4},
    {"C2+C3 b=(1,0,0) c=(1,0,0)", "S1", true, {"III:k=4", "II-2:b=1", "II-3:c=1"}, 15, 4},
    {"C2+C3 b=(1,0,0) c=(1,0,1)", "S1", true, {"III:k=4", "II-2:b=1", "II-3:c=1+x^2"}, 15, 4},
    {"C2+C3 b=(1,0,0) c=(1,1,0)", "S1", true, {"III:k=4", "II-2:b=1", "II-3:c=1+x"}, 15, 4},
    {"C2+C3 b=(1,0,0) c=(1,1,1)", "S1", true, {"III:k=4", "II-2:b=1", "II-3:c=1+x+x^2"}, 15, 4},
    {"C2+C3 b=(1,0,1) c=(0,0,0)", "S1", true, {"III:k=4", "II-2:b=1+x^2", "II-3:c=0"}, 15, 4},
    {"C2+C3 b=(1,0,1) c=(0,0,1)", "S1", true, {"III:k=4", "II-2:b=1+x^2", "II-3:c=x^2"}, 15, 4},
    {"C2+C3 b=(1,0,1) c=(0,1,0)", "S1", true, {"III:k=4", "II-2:b=1+x^2", "II-3:c=x"}, 15, 4},
    {"C2+C3 b=(1,0,1) c=(0,1,1)", "S1", true, {"III:k=4", "II-2:b=1+x^2", "II-3:c=x+x^2"}, 15, 4},
    {"C2+C3 b=(1,0,1) c=(1,0,0)", "S1", true, {"III:k=4", "II-2:b=1+x^2", "II-3:c=1"}, 15, 4},
    {"C2+C3 b=(1,0,1) c=(1,0,1)", "S1", true, {"III:k=4", "II-2:b=1+x^2", "II-3:c=1+x^2"}, 15, 4},
    {"C2+C3 b=(1,0,1) c=(1,1,0)", "S1", true, {"III:k=4", "II-2:b=1+x^2", "II-3:c=1+x"}, 15, 4},
    {"C2+C3 b=(1,0,1) c=(1,1,1)", "S1", true, {"III:k=4", "II-2:b=1+x^2", "II-3:c=1+x+x^2"}, 15, 4},
    {"C2+C3 b=(1,1,0) c=(0,0,0)", "S1", true, {"III:k=4", "II-2:b=1+x", "II-3:c=0"}, 15, 4},
    {"C2+C3 b=(1,1,0) c=(0,0,1)", "S1", true, {"III:k=4", "II-2:b=1+x", "II-3:c=x^2"}, 15, 4},
    {"C2+C3 b=(1,1,0) c=(0,1,0)", "S1", true, {"III:k=4", "II-2:b=1+x", "II-3:c=x"}, 15, 4},
    {"C2+C3 b=(1,1,0) c=(0,1,1)", "S1", true, {"III:k=4", "II-2:b=1+x", "II-3:c=x+x^2"}, 15, 4},
    {"C2+C3 b=(1,1,0) c=(1,0,0)", "S1", true, {"III:k=4", "II-2:b=1+x", "II-3:c=1"}, 15, 4},
    {"C2+C3 b=(1,1,0) c=(1,0,1)", "S1", true, {"III:k=4", "II-2:b=1+x", "II-3:c=1+x^2"}, 15, 4},
    {"C2+C3 b=(1,1,0) c=(1,1,0)", "S1", true, {"III:k=4", "II-2:b=1+x", "II-3:c=1+x"}, 15, 4},
    {"C2+C3 b=(1,1,0) c=(1,1,1)", "S1", true, {"III:k=4", "II-2:b=1+x", "II-3:c=1+x+x^2"}, 15, 4},
    {"C2+C3 b=(1,1,1) c=(0,0,0)", "S1", true, {"III:k=4", "II-2:b=1+x+x^2", "II-3:c=0"}, 15, 4},
    {"C2+C3 b=(1,1,1) c=(0,0,1)", "S1", true, {"III:k=4", "II-2:b=1+x+x^2", "II-3:c=x^2"}, 15, 4},
    {"C2+C3 b=(1,1,1) c=(0,1,0)", "S1", true, {"III:k=4", "II-2:b=1+x+x^2", "II-3:c=x"}, 15, 4},
    {"C2+C3 b=(1,1,1) c=(0,1,1)", "S1", true, {"III:k=4", "II-2:b=1+x+x^2", "II-3:c=x+x^2"}, 15, 4},
    {"C2+C3 b=(1,1,1) c=(1,0,0)", "S1", true, {"III:k=4", "II-2:b=1+x+x^2", "II-3:c=1"}, 15, 4},
    {"C2+C3 b=(1,1,1) c=(1,0,1)", "S1", true, {"III:k=4", "II-2:b=1+x+x^2", "II-3:c=1+x^2"}, 15, 4},
    {"C2+C3 b=(1,1,1) c=(1,1,0)", "S1", true, {"III:k=4", "II-2:b=1+x+x^2", "II-3:c=1+x"}, 15, 4},
    {"C2+C3 b=(1,1,1) c=(1,1,1)", "S1", true, {"III:k=4", "II-2:b=1+x+x^2", "II-3:c=1+x+x^2"}, 15, 4},
};

}  // namespace

std::span<const FactorRef> factors() { return kFactors; }
std::span<const BridgeRef> bridge_values() { return kBridge; }
std::span<const CodeRef> code_parameters() { return kCodes; }

}  // namespace constaclass::worked_example
