#pragma once

// Ramification and special-fibre decisions from valuation data.

#include <string>

#include "jackson/errors.hpp"
#include "jackson/families.hpp"
#include "jackson/kodaira.hpp"
#include "jackson/specialize.hpp"

namespace jackson {

enum class Ramification { Unramified, UnramifiedAfterGeneratorChange, Ramified };
enum class FibreType { Polynomial, QuantumAffine, GenericJackson, WeylOverLine, Affine3 };
enum class KWFibre { Polynomial, QuantumAffine, Generic };
enum class Verdict { Semistable, NonSemistable, SemistableAfterChange };

inline const char* to_string(Ramification r) {
    switch (r) {
        case Ramification::Unramified: return "unramified";
        case Ramification::UnramifiedAfterGeneratorChange: return "unramified_after_generator_change";
        case Ramification::Ramified: return "ramified";
    }
    return "?";
}
inline const char* to_string(FibreType f) {
    switch (f) {
        case FibreType::Polynomial: return "Polynomial";
        case FibreType::QuantumAffine: return "QuantumAffine";
        case FibreType::GenericJackson: return "GenericJackson";
        case FibreType::WeylOverLine: return "WeylOverLine";
        case FibreType::Affine3: return "Affine3";
    }
    return "?";
}
inline const char* to_string(KWFibre f) {
    switch (f) {
        case KWFibre::Polynomial: return "Polynomial";
        case KWFibre::QuantumAffine: return "QuantumAffine";
        case KWFibre::Generic: return "Generic";
    }
    return "?";
}
inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Semistable: return "semistable";
        case Verdict::NonSemistable: return "non_semistable";
        case Verdict::SemistableAfterChange: return "semistable_after_change";
    }
    return "?";
}

struct RamificationInput {
    long n = 2;          // Kummer degree
    long v_x = 0;        // valuation of the Kummer generator
    bool ell_divides_n = false;
    long e_abs = 1;      // absolute ramification index
    long residue_char = 0;
};

inline Ramification classify_cyclotomic_ramification(long p, long e_abs, bool q_divides_p) {
    if (p == 2) return q_divides_p ? Ramification::Ramified : Ramification::Unramified;
    if (q_divides_p && e_abs % (p - 1) != 0) return Ramification::Ramified;
    return Ramification::Unramified;
}

inline Ramification classify_kummer_ramification(const RamificationInput& in) {
    if (in.ell_divides_n) throw WrongRegime("Kummer ramification from valuations needs ell not dividing n");
    if (in.v_x < 0) throw WrongRegime("generator must be integral");
    if (in.v_x == 0) return Ramification::Unramified;
    if (in.v_x % in.n == 0) return Ramification::UnramifiedAfterGeneratorChange;
    return Ramification::Ramified;
}

inline long normalize_generator(long v_x, long n) {
    if (v_x < 0) throw WrongRegime("generator must be integral");
    return v_x % n;
}

inline FibreType classify_fibre(const RamificationInput& in) {
    bool x_unit = in.v_x == 0;
    if (!in.ell_divides_n) return x_unit ? FibreType::GenericJackson : FibreType::QuantumAffine;
    return x_unit ? FibreType::WeylOverLine : FibreType::Affine3;
}

// KW analogue: zeta-bar = 1 for ell | n (n a power of ell), x-bar = 0 for v_x > 0.
inline KWFibre classify_kw_fibre(const RamificationInput& in) {
    if (in.ell_divides_n) return KWFibre::Polynomial;
    return in.v_x == 0 ? KWFibre::Generic : KWFibre::QuantumAffine;
}

inline Verdict semistability_verdict(FibreType f, long v_x, long n) {
    switch (f) {
        case FibreType::GenericJackson: return Verdict::Semistable;
        case FibreType::QuantumAffine:
            return v_x % n == 0 ? Verdict::SemistableAfterChange : Verdict::NonSemistable;
        default: throw WrongRegime(std::string(to_string(f)) + " belongs to the ell = p regime");
    }
}

// Whether the Kummer extension cut out by the p-torsion is unramified,
// read off the Kodaira symbol. n_j = -v(j) for the I_n types.
inline bool kida_unramified(const KodairaSymbol& k, long p, long n_j) {
    if (p < 2) throw BadPrime("p must be prime");
    switch (k.kind) {
        case KodairaKind::I0: return true;
        case KodairaKind::In: return n_j % p == 0;
        case KodairaKind::I0star: return p == 2;
        case KodairaKind::Instar: return p == 2 && n_j % 2 != 0;
        default: return false;
    }
}

// Classifies a reduced Jackson presentation by inspecting which scalars vanish.
template <class S>
FibreType inspect_jackson_fibre(const QPresentation<S>& P) {
    const auto& r10 = P.rule(1, 0);
    const auto& r21 = P.rule(2, 1);
    bool zeta_trivial = r10.q.is_one();
    bool x_zero = r21.tail_zero();
    if (zeta_trivial) return x_zero ? FibreType::Affine3 : FibreType::WeylOverLine;
    return x_zero ? FibreType::QuantumAffine : FibreType::GenericJackson;
}

template <class S>
KWFibre inspect_kw_fibre(const QPresentation<S>& P) {
    bool all_one = true, tails = false;
    for (const Rule<S>* r : P.ordered_rules()) {
        if (!r->q.is_one()) all_one = false;
        if (!r->tail_zero()) tails = true;
    }
    if (all_one && !tails) return KWFibre::Polynomial;
    if (!tails) return KWFibre::QuantumAffine;
    return KWFibre::Generic;
}

// Independent path: build Jackson over Q(zeta_n) with x = ell^{v_x} (times a
// unit prime to ell), reduce at ell, inspect.
inline FibreType specialize_then_inspect(long n, long r, long v_x, long ell) {
    CyclotomicField F(n);
    Rational x = 1;
    for (long k = 0; k < v_x; ++k) x *= ell;
    // a unit factor keeps the generic case honest
    long unit = (ell == 2) ? 3 : 2;
    while (unit % ell == 0) ++unit;
    x *= unit;
    auto J = build_jackson(r, F.from_rational(x), F.zeta());
    auto red = specialize(J, PrimeContext{ell, 1, 1});
    return inspect_jackson_fibre(red);
}

}  // namespace jackson
