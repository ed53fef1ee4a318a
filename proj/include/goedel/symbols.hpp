#pragma once

#include <cstdint>
#include <string>

namespace goedel {

// The fixed alphabet. Code 0 is never assigned and code 25 is reserved
// unassigned, so any digit string containing 0 or 25 is not decodable.
enum Sym : uint8_t {
    kZero = 1,      // 0
    kSucc = 2,      // s
    kPlus = 3,      // +
    kTimes = 4,     // *
    kEquals = 5,    // =
    kLParen = 6,    // (
    kRParen = 7,    // )
    kComma = 8,     // ,
    kNot = 9,       // ~
    kAnd = 10,      // &
    kOr = 11,       // |
    kImplies = 12,  // ->
    kIff = 13,      // <->
    kExists = 14,   // E
    kForall = 15,   // A
    kPredP = 16,    // P
    kSubFn = 17,    // sub
    kVarX = 18,
    kVarY = 19,
    kVarZ = 20,
    kVarR = 21,
    kVarW = 22,
    kVarU = 23,
    kVarV = 24,
    kProofSep = 26,  // separator between proof lines, never inside a formula
};

constexpr uint8_t kMaxSymbolCode = 26;
constexpr char kVarNames[] = "xyzrwuv";  // codes 18..24 in this order

inline bool is_var_code(uint8_t c) { return c >= kVarX && c <= kVarV; }

inline bool is_symbol_code(uint8_t c) {
    return c >= 1 && c <= kMaxSymbolCode && c != 25;
}

inline char var_name(uint8_t code) { return kVarNames[code - kVarX]; }

// Returns 0 for a character that is not a variable name.
inline uint8_t var_code(char name) {
    for (int i = 0; i < 7; ++i)
        if (kVarNames[i] == name) return static_cast<uint8_t>(kVarX + i);
    return 0;
}

// ASCII spelling of one symbol, as the parser accepts it.
inline const char* symbol_text(uint8_t code) {
    switch (code) {
        case kZero: return "0";
        case kSucc: return "s";
        case kPlus: return "+";
        case kTimes: return "*";
        case kEquals: return "=";
        case kLParen: return "(";
        case kRParen: return ")";
        case kComma: return ",";
        case kNot: return "~";
        case kAnd: return "&";
        case kOr: return "|";
        case kImplies: return "->";
        case kIff: return "<->";
        case kExists: return "E";
        case kForall: return "A";
        case kPredP: return "P";
        case kSubFn: return "sub";
        case kVarX: return "x";
        case kVarY: return "y";
        case kVarZ: return "z";
        case kVarR: return "r";
        case kVarW: return "w";
        case kVarU: return "u";
        case kVarV: return "v";
        default: return "?";
    }
}

}  // namespace goedel
