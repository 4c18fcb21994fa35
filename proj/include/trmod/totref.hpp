#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trmod/modmat.hpp"

namespace trmod {

enum class Verdict { Certified, Refuted, Inconclusive };
enum class Obstruction { KSummand, NonConstantBetti, ExtModule, ExtDual };

std::string to_string(Verdict v);
std::string to_string(Obstruction o);

struct Refutation {
    Obstruction kind = Obstruction::KSummand;
    int step = 0;
    Matrix differential;                // the offending d_step
    std::vector<Coeff> combination;     // k-summand: scalar q with d_step * q in m^2
    std::string detail;
};

// Exactness at one spot, compared as k-dimensions. Spot k sits at F_k; in the
// dual complex it sits at F_k^*.
struct SpotCheck {
    int spot = 0;
    bool dual = false;
    int image_dim = 0;
    int kernel_dim = 0;
    bool ok() const noexcept { return image_dim == kernel_dim; }
};

struct TRCertificate {
    Verdict verdict = Verdict::Inconclusive;
    Matrix module;  // presentation after removing free summands
    int free_rank = 0;
    bool gorenstein = false;
    int depth = 0;

    // Certified: forward = d_1 .. d_L with L = preperiod + period; the successor
    // of d_L is d_{preperiod+1}. spliced marks a loop closed by an equivalence.
    int preperiod = 0;
    int period = 0;
    bool spliced = false;
    std::vector<Matrix> forward;
    std::vector<Matrix> backward;  // d_0, d_{-1}, ...
    std::vector<SpotCheck> log;
    std::vector<int> betti;
    int length = 0;
    bool betti_constant = false;
    bool length_is_ne = false;

    std::optional<Refutation> refutation;
    std::string note;
};

TRCertificate check_totally_reflexive(const Algebra& A, const Matrix& M, int depth = 32);

// Re-derives every exactness claim of a certificate or refutation from its
// matrices alone.
bool replay(const Algebra& A, const TRCertificate& cert);

// Spot checks shared by the certifier and the replayer.
SpotCheck forward_spot(const Algebra& A, int spot, const Matrix& in, const Matrix& out);
SpotCheck dual_spot(const Algebra& A, int spot, const Matrix& out, const Matrix& in);

struct UTReport {
    bool totally_reflexive = false;
    std::vector<RingElement> diagonal;
    std::vector<std::optional<RingElement>> partners;  // exact zero divisor partner per diagonal entry
    std::optional<bool> cross_check;                   // agreement with check_totally_reflexive
    // Set when M was not a minimal presentation (redundant columns or free
    // summands): the diagonal test ran on this minimal one instead.
    std::optional<Matrix> reduced;
    std::string note;
};

UTReport check_ut_tr(const Algebra& A, const Matrix& M, bool cross_validate = false);

// Syzygy of an upper triangular matrix with exact zero divisors on the
// diagonal, kept upper triangular. nullopt when the block construction fails.
std::optional<Matrix> ut_syzygy(const Algebra& A, const Matrix& T);

struct CompleteResolution {
    int preperiod = 0;
    int period = 0;
    std::vector<Matrix> forward;   // d_1 .. d_window
    std::vector<Matrix> backward;  // d_0 .. d_{1-window}
};

CompleteResolution complete_resolution(const Algebra& A, const Matrix& M, int window);

}  // namespace trmod
