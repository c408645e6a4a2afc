#include "qcap/pauli.h"

#include <bit>
#include <cmath>

#include "qcap/errors.h"

namespace qcap {

namespace {

constexpr double kStructuralZero = 1e-14;

std::uint32_t qubit_bit(unsigned num_qubits, unsigned q) {
    return 1u << (num_qubits - 1 - q);
}

void require_qubit_count(unsigned num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxPauliQubits) {
        throw ShapeError("Pauli strings support 1.." + std::to_string(kMaxPauliQubits) + " qubits, got " +
                         std::to_string(num_qubits));
    }
}

// i^k for k mod 4.
Complex i_power(unsigned k) {
    switch (k & 3u) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
    }
}

}  // namespace

PauliString PauliString::identity(unsigned num_qubits) {
    require_qubit_count(num_qubits);
    return PauliString{static_cast<std::uint8_t>(num_qubits), 0, 0};
}

PauliString PauliString::from_text(std::string_view text) {
    require_qubit_count(static_cast<unsigned>(text.size()));
    PauliString p = identity(static_cast<unsigned>(text.size()));
    for (unsigned q = 0; q < text.size(); ++q) {
        const std::uint32_t bit = qubit_bit(p.num_qubits, q);
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                p.x_mask |= bit;
                break;
            case 'Y':
                p.x_mask |= bit;
                p.z_mask |= bit;
                break;
            case 'Z':
                p.z_mask |= bit;
                break;
            default:
                throw ParameterError("invalid Pauli letter '" + std::string(1, text[q]) + "' in \"" +
                                     std::string(text) + "\"");
        }
    }
    return p;
}

PauliString PauliString::from_index(unsigned num_qubits, std::uint32_t index) {
    PauliString p = identity(num_qubits);
    if (index >= (1u << (2 * num_qubits))) {
        throw ShapeError("Pauli index out of range");
    }
    for (unsigned q = num_qubits; q-- > 0;) {
        const unsigned letter = index & 3u;
        index >>= 2;
        const std::uint32_t bit = qubit_bit(num_qubits, q);
        if (letter == 1 || letter == 2) {
            p.x_mask |= bit;
        }
        if (letter == 2 || letter == 3) {
            p.z_mask |= bit;
        }
    }
    return p;
}

std::string PauliString::to_text() const {
    std::string s(num_qubits, 'I');
    for (unsigned q = 0; q < num_qubits; ++q) {
        const std::uint32_t bit = qubit_bit(num_qubits, q);
        const bool x = x_mask & bit;
        const bool z = z_mask & bit;
        s[q] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

unsigned PauliString::weight() const {
    return static_cast<unsigned>(std::popcount(x_mask | z_mask));
}

std::uint32_t PauliString::index() const {
    std::uint32_t idx = 0;
    for (unsigned q = 0; q < num_qubits; ++q) {
        const std::uint32_t bit = qubit_bit(num_qubits, q);
        const bool x = x_mask & bit;
        const bool z = z_mask & bit;
        const unsigned letter = x ? (z ? 2 : 1) : (z ? 3 : 0);
        idx = idx * 4 + letter;
    }
    return idx;
}

std::vector<PauliString> all_paulis(unsigned num_qubits) {
    require_qubit_count(num_qubits);
    std::vector<PauliString> out;
    const std::uint32_t n = 1u << (2 * num_qubits);
    out.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        out.push_back(PauliString::from_index(num_qubits, k));
    }
    return out;
}

ComplexMatrix pauli_matrix(const PauliString &p) {
    require_qubit_count(p.num_qubits);
    const std::size_t dim = std::size_t{1} << p.num_qubits;
    const Complex phase = i_power(static_cast<unsigned>(std::popcount(p.x_mask & p.z_mask)));
    ComplexMatrix m(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        const bool flip = std::popcount(p.z_mask & static_cast<std::uint32_t>(c)) & 1;
        m(c ^ p.x_mask, c) = flip ? -phase : phase;
    }
    return m;
}

int commute_sign(const PauliString &p, const PauliString &q) {
    if (p.num_qubits != q.num_qubits) {
        throw ShapeError("commute_sign: " + std::to_string(p.num_qubits) + " vs " + std::to_string(q.num_qubits) +
                         " qubits");
    }
    const int parity = std::popcount(p.x_mask & q.z_mask) + std::popcount(p.z_mask & q.x_mask);
    return (parity & 1) ? -1 : 1;
}

unsigned qubits_for_dimension(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw ShapeError("dimension " + std::to_string(dim) + " is not a power of two");
    }
    const auto m = static_cast<unsigned>(std::countr_zero(dim));
    require_qubit_count(m);
    return m;
}

PauliExpansion pauli_expand(const ComplexMatrix &m, unsigned num_qubits) {
    require_qubit_count(num_qubits);
    if (!m.is_square() || m.rows() != (std::size_t{1} << num_qubits)) {
        throw ShapeError("pauli_expand: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected dimension 2^" + std::to_string(num_qubits));
    }
    const std::size_t dim = m.rows();
    PauliExpansion out;
    for (const auto &p : all_paulis(num_qubits)) {
        // tr(P^dag M) = sum_c conj(P(c^x, c)) M(c^x, c)
        const Complex phase = std::conj(i_power(static_cast<unsigned>(std::popcount(p.x_mask & p.z_mask))));
        Complex acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            const bool flip = std::popcount(p.z_mask & static_cast<std::uint32_t>(c)) & 1;
            const Complex v = m(c ^ p.x_mask, c);
            acc += flip ? -v : v;
        }
        out.emplace(p, phase * acc / static_cast<double>(dim));
    }
    return out;
}

ComplexMatrix pauli_reconstruct(const PauliExpansion &coefficients, unsigned num_qubits) {
    ComplexMatrix m(std::size_t{1} << num_qubits);
    for (const auto &[p, c] : coefficients) {
        if (p.num_qubits != num_qubits) {
            throw ShapeError("pauli_reconstruct: mixed qubit counts");
        }
        m += pauli_matrix(p) * c;
    }
    return m;
}

std::optional<DiagonalTimesPauli> factor_diagonal_times_pauli(const ComplexMatrix &k, unsigned num_qubits) {
    require_qubit_count(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (!k.is_square() || k.rows() != dim) {
        return std::nullopt;
    }
    std::optional<std::uint32_t> shift;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (std::abs(k(r, c)) < kStructuralZero) {
                continue;
            }
            const auto s = static_cast<std::uint32_t>(r ^ c);
            if (shift && *shift != s) {
                return std::nullopt;
            }
            shift = s;
        }
    }
    PauliString p = PauliString::identity(num_qubits);
    p.x_mask = shift.value_or(0);
    // The X-type string is a real permutation and its own inverse: V = K P.
    ComplexMatrix v(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const Complex entry = k(r, r ^ p.x_mask);
        v(r, r) = std::abs(entry) < kStructuralZero ? Complex{} : entry;
    }
    return DiagonalTimesPauli{std::move(v), p};
}

}  // namespace qcap
