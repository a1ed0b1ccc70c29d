#pragma once

// Kodaira symbols of special fibres and their component counts.

#include <string>

#include "jackson/errors.hpp"

namespace jackson {

enum class KodairaKind { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaSymbol {
    KodairaKind kind = KodairaKind::I0;
    int n = 0;  // only for I_n and I*_n

    static KodairaSymbol I(int n) { return n == 0 ? KodairaSymbol{KodairaKind::I0, 0} : KodairaSymbol{KodairaKind::In, n}; }
    static KodairaSymbol Istar(int n) {
        return n == 0 ? KodairaSymbol{KodairaKind::I0star, 0} : KodairaSymbol{KodairaKind::Instar, n};
    }

    bool operator==(const KodairaSymbol& o) const { return kind == o.kind && n == o.n; }

    bool good() const { return kind == KodairaKind::I0; }
    bool multiplicative() const { return kind == KodairaKind::In; }
    bool additive() const { return !good() && !multiplicative(); }

    // geometric number of irreducible components
    int components() const {
        switch (kind) {
            case KodairaKind::I0: return 1;
            case KodairaKind::In: return n;
            case KodairaKind::II: return 1;
            case KodairaKind::III: return 2;
            case KodairaKind::IV: return 3;
            case KodairaKind::I0star: return 5;
            case KodairaKind::Instar: return 5 + n;
            case KodairaKind::IVstar: return 7;
            case KodairaKind::IIIstar: return 8;
            case KodairaKind::IIstar: return 9;
        }
        return 0;
    }

    std::string str() const {
        switch (kind) {
            case KodairaKind::I0: return "I0";
            case KodairaKind::In: return "I" + std::to_string(n);
            case KodairaKind::II: return "II";
            case KodairaKind::III: return "III";
            case KodairaKind::IV: return "IV";
            case KodairaKind::I0star: return "I0*";
            case KodairaKind::Instar: return "I" + std::to_string(n) + "*";
            case KodairaKind::IVstar: return "IV*";
            case KodairaKind::IIIstar: return "III*";
            case KodairaKind::IIstar: return "II*";
        }
        return "?";
    }

    // accepts I0, I5, II, III, IV, I0*, I3*, IV*, III*, II*
    static KodairaSymbol parse(const std::string& s) {
        if (s == "II") return {KodairaKind::II, 0};
        if (s == "III") return {KodairaKind::III, 0};
        if (s == "IV") return {KodairaKind::IV, 0};
        if (s == "IV*") return {KodairaKind::IVstar, 0};
        if (s == "III*") return {KodairaKind::IIIstar, 0};
        if (s == "II*") return {KodairaKind::IIstar, 0};
        if (s.size() >= 2 && s[0] == 'I') {
            bool star = s.back() == '*';
            std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
            if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
                int n = std::stoi(digits);
                return star ? Istar(n) : I(n);
            }
        }
        throw ParseError("unknown Kodaira symbol '" + s + "'");
    }
};

}  // namespace jackson
