#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hochkit/algebra.hpp"
#include "hochkit/hochschild.hpp"

namespace hochkit {

/// e in A (x) A (index i * d + j) with mu(e) = 1 and a e = e a for all a, if any.
[[nodiscard]] std::optional<Matrix> separability_idempotent(const FiniteAlgebra& a);

/// Outcome of deciding whether Omega^n splits off the bar module CB_n.
struct ProjectivityCertificate {
    long level = 0;
    bool normalized = false;
    bool projective = false;
    /// A^e-linear sigma : Omega^n -> CB_n with b'_n sigma = inclusion of Omega^n
    /// (columns in CB_n coordinates, one per Omega^n basis vector).
    std::optional<Matrix> section;
    /// A^e-linear retraction rho : CB_n -> Omega^{n+1}, given by its values
    /// rho(1 (x) t (x) 1) as level-n vectors, one column per generator t.
    std::optional<Matrix> retraction;
    /// "direct" (splitting solved at this level), "propagated from level m", or
    /// "cohomology witness" (some HH^{n+1} != 0; no splitting exists).
    std::string method;
    /// Why no section exists.
    std::string obstruction;
};

/// k with both actions through the algebra map A -> k killing e_1, ..., e_{d-1},
/// when e_0 = 1 and that map is multiplicative. HH^n(A, k) = Ext^n_A(k, k).
[[nodiscard]] std::optional<Bimodule> augmentation_bimodule(const FiniteAlgebra& a);

/// Decides whether 0 -> Omega^{n+1} -> CB_n -> Omega^n -> 0 splits A^e-linearly,
/// i.e. whether Omega^n is projective relative to k-split sequences. Over Z only
/// integral splittings count. When the linear system at level n exceeds the
/// size guard, a splitting at a lower level is pushed up (Omega^m projective
/// implies Omega^n projective for n >= m), and otherwise a nonzero HH^{n+1}(A, M)
/// for M = A, A^e or k (see augmentation_bimodule) refutes projectivity; SizeGuardError if neither applies.
[[nodiscard]] ProjectivityCertificate omega_is_projective(const FiniteAlgebra& a, long n, bool normalized = false);

/// Re-checks b'_n sigma = id on Omega^n and A^e-linearity of sigma. False when
/// the certificate carries no section.
[[nodiscard]] bool verify_section(const FiniteAlgebra& a, const ProjectivityCertificate& cert);

/// A copy of a with the unit moved to the front, or nullopt if impossible.
[[nodiscard]] std::optional<UnitalBasis> unital_form(const FiniteAlgebra& a);

struct QuasiFreeReport {
    bool quasi_free = false;
    ProjectivityCertificate certificate;
    /// When not quasi-free: probe name and a 2-cocycle spanning part of HH^2.
    std::string witness_probe;
    std::optional<Cochain> witness;
    /// When quasi-free: number of extensions checked to lift.
    std::size_t lifts_checked = 0;
};

/// Omega^1 projectivity, using the normalized complex when a unital basis
/// exists. A positive verdict is spot-checked by lifting the trivial extension
/// and random crossed products.
[[nodiscard]] QuasiFreeReport is_quasi_free(const FiniteAlgebra& a, unsigned seed = 1);

struct ProbeResult {
    std::string name;
    /// invariants[n] = HH^n(A, probe); missing degrees were skipped by the size guard.
    std::vector<std::optional<KModuleInvariants>> invariants;
};

struct HcdimReport {
    long cap = 0;
    /// Least n <= cap with Omega^n projective; nullopt means "> cap".
    std::optional<long> proved_upper;
    /// Largest n with some probe having HH^n != 0.
    long witnessed_lower = 0;
    std::string lower_witness;
    std::vector<ProbeResult> probes;
    /// Levels whose projectivity test was skipped by the size guard.
    std::vector<long> skipped_levels;
};

/// Probes: A, A^e (= CB_0), Omega^1, Omega^2, Hom_k(A, A), k when augmented,
/// plus extra ones.
[[nodiscard]] HcdimReport hcdim_scan(const FiniteAlgebra& a, long cap,
                                     const std::vector<std::pair<std::string, Bimodule>>& extra = {});

}  // namespace hochkit
