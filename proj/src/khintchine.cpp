#include "ria/khintchine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ria {

namespace {

struct Candidate {
    double w = 0;
    int64_t M = 0;
    std::vector<int64_t> q;
    mpz_class p;
};

// Per max-norm shell: a few best candidates in double, enough to resolve the
// exact minimum afterwards.
struct Shell {
    static constexpr int kKeep = 16;
    std::vector<Candidate> best;  // sorted by w ascending
    double slack_limit = 0;       // entries dropped while within slack => rescan
    bool overflow = false;

    void offer(double w, int64_t M, const std::vector<int64_t>& q, const mpz_class& p, double slack) {
        if (int(best.size()) == kKeep && w >= best.back().w) {
            if (w <= best.front().w + slack) overflow = true;
            return;
        }
        Candidate c{w, M, q, p};
        auto it = std::lower_bound(best.begin(), best.end(), w,
                                   [](const Candidate& a, double v) { return a.w < v; });
        best.insert(it, std::move(c));
        if (int(best.size()) > kKeep) {
            if (best.back().w <= best.front().w + slack) overflow = true;
            best.pop_back();
        }
    }
};

bool lex_less(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Odometer over q in [-Qmax, Qmax]^m, canonical representatives only
// (first nonzero coordinate positive), q != 0.
class CanonicalLattice {
  public:
    CanonicalLattice(int m, int64_t Qmax) : m_(m), Qmax_(Qmax), q_(m, -Qmax) {
        q_[m - 1] -= 1;  // so the first advance lands on the first point
    }
    bool next() {
        for (;;) {
            int i = m_ - 1;
            while (i >= 0) {
                if (q_[i] < Qmax_) {
                    ++q_[i];
                    for (int j = i + 1; j < m_; ++j) q_[j] = -Qmax_;
                    break;
                }
                --i;
            }
            if (i < 0) return false;
            // canonical: first nonzero coordinate > 0
            int k = 0;
            while (k < m_ && q_[k] == 0) ++k;
            if (k == m_) continue;      // q = 0
            if (q_[k] < 0) continue;    // mirrored representative
            return true;
        }
    }
    const std::vector<int64_t>& q() const { return q_; }

  private:
    int m_;
    int64_t Qmax_;
    std::vector<int64_t> q_;
};

}  // namespace

Real khintchine_eval(const std::vector<Real>& alpha, double epsilon, const mpz_class& p,
                     const std::vector<int64_t>& q) {
    mpfr_prec_t prec = default_precision();
    Real acc = Real::of(p, prec);
    int64_t M = 0;
    for (size_t i = 0; i < alpha.size(); ++i) {
        acc += alpha[i].mul_si(long(q[i]));
        M = std::max(M, std::abs(q[i]));
    }
    Real weight = Real::of(long(M), prec).pow(Real::of(double(alpha.size()) + epsilon, prec));
    return acc.abs() * weight;
}

std::vector<KhintchineEstimate> khintchine_kappa_profile(const std::vector<Real>& alpha,
                                                         double epsilon,
                                                         const std::vector<int64_t>& qmax_list) {
    const int m = int(alpha.size());
    if (m < 1) throw std::invalid_argument("khintchine_kappa: m >= 1 required");
    if (epsilon <= 0) throw std::invalid_argument("khintchine_kappa: epsilon > 0 required");
    if (qmax_list.empty()) throw std::invalid_argument("khintchine_kappa: empty Qmax list");
    for (size_t i = 0; i < qmax_list.size(); ++i) {
        if (qmax_list[i] < 1) throw std::invalid_argument("khintchine_kappa: Qmax >= 1 required");
        if (i && qmax_list[i] <= qmax_list[i - 1])
            throw std::invalid_argument("khintchine_kappa: Qmax list must be strictly increasing");
    }
    const int64_t Qtop = qmax_list.back();

    std::vector<double> ad(m);
    double amax = 0;
    for (int i = 0; i < m; ++i) {
        ad[i] = alpha[i].to_double();
        amax += std::fabs(ad[i]);
    }
    // Rigorous-with-margin double error bound for |p + alpha.q| at shell M.
    auto verr = [&](int64_t M) { return 1e-13 * double(M) * (amax + 1.0); };

    std::vector<double> powM(size_t(Qtop) + 1, 0.0);
    for (int64_t M = 1; M <= Qtop; ++M) powM[size_t(M)] = std::pow(double(M), double(m) + epsilon);

    std::vector<Shell> shells(size_t(Qtop) + 1);
    CanonicalLattice lat(m, Qtop);
    std::vector<int64_t> qbuf;
    while (lat.next()) {
        const auto& q = lat.q();
        double t = 0;
        int64_t M = 0;
        for (int i = 0; i < m; ++i) {
            t += ad[i] * double(q[i]);
            M = std::max(M, std::abs(q[i]));
        }
        double pn = -std::nearbyint(t);
        double v = std::fabs(t + pn);
        double w = v * powM[size_t(M)];
        double slack = 2 * verr(M) * powM[size_t(M)];
        shells[size_t(M)].offer(w, M, q, mpz_class(long(pn)), slack);
    }

    // Exact rescan of any shell whose double filter may have dropped a
    // contender (essentially never fires; kept for soundness).
    for (int64_t M = 1; M <= Qtop; ++M) {
        Shell& sh = shells[size_t(M)];
        if (!sh.overflow) continue;
        sh.best.clear();
        CanonicalLattice shell_lat(m, M);
        while (shell_lat.next()) {
            const auto& q = shell_lat.q();
            int64_t mx = 0;
            for (int i = 0; i < m; ++i) mx = std::max(mx, std::abs(q[i]));
            if (mx != M) continue;
            Real acc = Real::of(0L);
            for (int i = 0; i < m; ++i) acc += alpha[i].mul_si(long(q[i]));
            mpz_class p = -acc.round_z();
            Real v = (acc + Real::of(p)).abs();
            double w = v.to_double() * powM[size_t(M)];
            sh.offer(w, M, q, p, 0.0);
        }
    }

    std::vector<KhintchineEstimate> out;
    double run_min = std::numeric_limits<double>::infinity();
    std::vector<Candidate> pool;
    size_t next_q = 0;
    for (int64_t M = 1; M <= Qtop; ++M) {
        for (const auto& c : shells[size_t(M)].best) pool.push_back(c);
        if (!shells[size_t(M)].best.empty())
            run_min = std::min(run_min, shells[size_t(M)].best.front().w);
        while (next_q < qmax_list.size() && qmax_list[next_q] == M) {
            // Resolve the exact minimum among double-plausible candidates.
            KhintchineEstimate est;
            est.alpha = alpha;
            est.epsilon = epsilon;
            est.Qmax = M;
            bool have = false;
            Real best_val;
            int64_t best_M = 0;
            for (const auto& c : pool) {
                double slack = 4 * verr(c.M) * powM[size_t(c.M)] + 4 * verr(M) * powM[size_t(M)];
                if (c.w > run_min + slack) continue;
                Real v = khintchine_eval(alpha, epsilon, c.p, c.q);
                bool better;
                if (!have) {
                    better = true;
                } else {
                    int cv = v.cmp(best_val);
                    if (cv != 0)
                        better = cv < 0;
                    else if (c.M != best_M)
                        better = c.M < best_M;
                    else if (c.q != est.q)
                        better = lex_less(c.q, est.q);
                    else
                        better = c.p < est.p;
                }
                if (better) {
                    best_val = v;
                    best_M = c.M;
                    est.kappa_hat = v;
                    est.p = c.p;
                    est.q = c.q;
                    have = true;
                }
            }
            if (!have) throw std::logic_error("khintchine_kappa: empty candidate pool");
            out.push_back(est);
            ++next_q;
        }
    }
    return out;
}

KhintchineEstimate khintchine_kappa(const std::vector<Real>& alpha, double epsilon, int64_t Qmax) {
    return khintchine_kappa_profile(alpha, epsilon, {Qmax}).front();
}

}  // namespace ria
