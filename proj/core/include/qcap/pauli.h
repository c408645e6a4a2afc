#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcap/matrix.h"

namespace qcap {

/// Largest qubit count a Pauli string may be materialized for (dimension 256).
inline constexpr unsigned kMaxPauliQubits = 8;

/// An m-qubit Pauli operator modulo global phase, stored as X/Z bitmasks.
///
/// Qubit 0 is the leading tensor factor and maps to the most significant bit
/// of a basis index, so `x_mask` XORed into a column index gives the row the
/// operator sends it to. Single-qubit letters use the convention Y = iXZ.
struct PauliString {
    std::uint8_t num_qubits = 0;
    std::uint32_t x_mask = 0;
    std::uint32_t z_mask = 0;

    static PauliString identity(unsigned num_qubits);
    /// Parses text such as "ZX": one letter from {I,X,Y,Z} per qubit.
    static PauliString from_text(std::string_view text);
    /// Inverse of `index()`.
    static PauliString from_index(unsigned num_qubits, std::uint32_t index);

    std::string to_text() const;
    unsigned weight() const;
    bool is_identity() const {
        return (x_mask | z_mask) == 0;
    }
    /// Position in the lexicographic order I < X < Y < Z, qubit 0 most significant.
    std::uint32_t index() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;
    friend std::strong_ordering operator<=>(const PauliString &a, const PauliString &b) {
        if (auto c = a.num_qubits <=> b.num_qubits; c != 0) {
            return c;
        }
        return a.index() <=> b.index();
    }
};

/// All 4^m strings in lexicographic order.
std::vector<PauliString> all_paulis(unsigned num_qubits);

ComplexMatrix pauli_matrix(const PauliString &p);

/// +1 if the operators commute, -1 if they anticommute. Uses the symplectic
/// form; no matrices are built.
int commute_sign(const PauliString &p, const PauliString &q);

using PauliExpansion = std::map<PauliString, Complex>;

/// Coefficients c_P = tr(P^dag M) / 2^m so that M = sum_P c_P P.
PauliExpansion pauli_expand(const ComplexMatrix &m, unsigned num_qubits);

ComplexMatrix pauli_reconstruct(const PauliExpansion &coefficients, unsigned num_qubits);

/// Qubit count m with 2^m == dim, or ShapeError.
unsigned qubits_for_dimension(std::size_t dim);

struct DiagonalTimesPauli {
    ComplexMatrix diagonal;
    PauliString pauli;
};

/// Writes K = V P with V diagonal and P a Pauli string, when possible.
///
/// Phases of P are absorbed into V, so the returned P is always X-type
/// (z_mask == 0). Entries below 1e-14 in modulus count as structural zeros.
std::optional<DiagonalTimesPauli> factor_diagonal_times_pauli(const ComplexMatrix &k, unsigned num_qubits);

}  // namespace qcap
