#ifndef CELLALG_CELLULAR_HPP
#define CELLALG_CELLULAR_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cellalg/algebra.hpp"

namespace cellalg {

/// Finite poset given by labels and a full reflexive-transitive relation.
class Poset {
public:
    /// Builds from covering relations (lower, higher); computes the
    /// transitive closure and rejects cycles.
    Poset(std::vector<std::string> labels,
          const std::vector<std::pair<std::size_t, std::size_t>>& covers);

    static Poset antichain(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * size_ + b]; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

    /// Hasse-diagram edges (lower, higher), lexicographic; canonical for
    /// serialization round trips.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.labels_ == b.labels_ && a.leq_ == b.leq_;
    }

private:
    std::vector<std::string> labels_;
    std::size_t size_;
    std::vector<bool> leq_;
};

struct CellIndex {
    std::size_t lambda;
    std::size_t row; // S
    std::size_t col; // T
};

/// Cell datum bookkeeping: the poset, the sets M(lambda) and the bijection
/// (lambda, S, T) <-> basis index. Construction checks that the index table
/// is a bijection onto 0..dim-1 with sum |M(lambda)|^2 == dim and that no
/// cell is empty.
class CellDatum {
public:
    CellDatum(Poset poset, std::vector<std::vector<std::string>> m_labels,
              std::vector<std::vector<std::vector<std::size_t>>> index);

    const Poset& poset() const { return poset_; }
    std::size_t cell_count() const { return poset_.size(); }
    std::size_t dim() const { return cell_of_.size(); }
    std::size_t m_size(std::size_t lambda) const { return m_labels_[lambda].size(); }
    const std::vector<std::string>& m_labels(std::size_t lambda) const {
        return m_labels_[lambda];
    }
    std::size_t index(std::size_t lambda, std::size_t s, std::size_t t) const {
        return index_[lambda][s][t];
    }
    const CellIndex& cell_of(std::size_t basis_index) const { return cell_of_[basis_index]; }

    friend bool operator==(const CellDatum& a, const CellDatum& b) {
        return a.poset_ == b.poset_ && a.m_labels_ == b.m_labels_ && a.index_ == b.index_;
    }

private:
    Poset poset_;
    std::vector<std::vector<std::string>> m_labels_;
    std::vector<std::vector<std::vector<std::size_t>>> index_;
    std::vector<CellIndex> cell_of_;
};

/// Checks the cell-datum axioms against the multiplication table:
///   - i(C^l_{S,T}) = C^l_{T,S} on basis indices;
///   - a_i * C^l_{S,T} is supported on column T of cell l plus strictly
///     lower cells;
///   - the cell-l coefficients r_a(S',S) do not depend on T;
///   - the involution-twisted right-hand condition.
/// Violations become fail entries with witnesses; nothing throws.
Report verify_cell_datum(const Algebra& a, const CellDatum& cd);

/// Cell module: action matrices r_a(S',S) per basis element plus the Gram
/// matrix of the cell form.
class CellModule {
public:
    CellModule(std::size_t lambda, std::vector<Matrix> actions, Matrix gram)
        : lambda_(lambda), actions_(std::move(actions)), gram_(std::move(gram)) {}

    std::size_t lambda() const { return lambda_; }
    std::size_t size() const { return gram_.rows(); } // |M(lambda)|
    const Matrix& action(std::size_t basis_index) const { return actions_[basis_index]; }
    const Matrix& gram() const { return gram_; }

    /// Character value on a basis element: trace of its action matrix.
    Scalar character_basis(std::size_t basis_index) const;
    Scalar character(const Element& x) const;

private:
    std::size_t lambda_;
    std::vector<Matrix> actions_;
    Matrix gram_;
};

/// An algebra together with a verified cell datum. create() runs
/// verify_cell_datum and throws NotCellular on any violation, then extracts
/// every cell module once.
class CellularAlgebra {
public:
    static CellularAlgebra create(Algebra a, CellDatum cd);

    const Algebra& algebra() const { return alg_; }
    const CellDatum& datum() const { return cd_; }
    const Report& verification() const { return verification_; }
    const CellModule& module(std::size_t lambda) const { return modules_[lambda]; }
    std::size_t cell_count() const { return cd_.cell_count(); }

    /// dim ker Phi_lambda.
    std::size_t rad_dim(std::size_t lambda) const;

    /// Cells whose Gram form is nonzero, in load order.
    std::vector<std::size_t> lambda0() const;

private:
    CellularAlgebra(Algebra a, CellDatum cd, Report verification,
                    std::vector<CellModule> modules)
        : alg_(std::move(a)),
          cd_(std::move(cd)),
          verification_(std::move(verification)),
          modules_(std::move(modules)) {}

    Algebra alg_;
    CellDatum cd_;
    Report verification_;
    std::vector<CellModule> modules_;
};

/// Representation property of the extracted action matrices:
/// action(a_i) action(a_j) = sum_k r_{ijk} action(a_k), and symmetry of
/// each Gram matrix.
Report verify_cell_modules(const CellularAlgebra& ca);

} // namespace cellalg

#endif
