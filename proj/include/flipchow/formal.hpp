#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flipchow/params.hpp"

namespace flipchow {

/// One building block: the Chow group of a space in a fixed codimension.
/// Allowed spaces are M(k), SymX(k) and N; M(k>0) and N occur only as
/// opaque markers inside sequence specs, never in resolution output.
struct Atom {
    SpaceId space;
    int codim = 0;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

std::string atom_name(const Atom& a);  // "A^2(M0)"

/// Finite multiset of atoms. All stored atoms satisfy 0 <= codim <= dim(space);
/// out-of-range atoms are the zero group and are dropped at insertion.
class FormalDecomposition {
  public:
    /// Inserts only if the atom survives the degree bounds for params p.
    void add(const ModuliParams& p, const Atom& a, int multiplicity = 1);

    bool empty() const { return counts_.empty(); }
    int total() const;
    int count(const Atom& a) const;
    const std::map<Atom, int>& counts() const { return counts_; }

    FormalDecomposition& merge(const FormalDecomposition& o);

    friend bool operator==(const FormalDecomposition&, const FormalDecomposition&) = default;

  private:
    std::map<Atom, int> counts_;
};

struct SequenceLabel {
    enum class Kind { Star, Theorem, Final };
    Kind kind = Kind::Star;
    int k = 0;  // Star only
    int l = 0;
};

/// Three-term split exact sequence 0 -> kernel -> middle -> quotient -> 0,
/// stored as formal decompositions of its terms.
struct ExactSequenceSpec {
    FormalDecomposition kernel;
    FormalDecomposition middle;
    FormalDecomposition quotient;
    bool split = true;
    SequenceLabel label;
};

/// The blow-up/blow-down step sequence at level (k, l):
///   0 -> (+)_{r=0..k-2} A^{l-m+2k-r}(S^kX)
///     -> A^l(M_{k-1}) (+) (+)_{s=0..m-2k-2} A^{l-k-s}(S^kX)
///     -> A^l(M_k) -> 0
ExactSequenceSpec star_sequence(const ModuliParams& p, int k, int l);

/// The main sequence resolving A^l(N) by M_0 and symmetric powers.
ExactSequenceSpec theorem_sequence(const ModuliParams& p, int l);

/// The projective-bundle sequence for M_w over N at level l.
ExactSequenceSpec final_sequence(const ModuliParams& p, int l);

/// Finite resolution 0 <- A^l(N) <- Omega_0 <- ... <- Omega_t <- 0 obtained by
/// recursively expanding every N-atom in the kernel of theorem_sequence and
/// splicing. Every Omega_i lives over the alphabet { M(0), SymX(k) } only.
/// Requires 0 <= l <= dim N; terminates because expansion codimension strictly
/// increases and N-atoms vanish above dim N.
std::vector<FormalDecomposition> resolution(const ModuliParams& p, int l);

}  // namespace flipchow
