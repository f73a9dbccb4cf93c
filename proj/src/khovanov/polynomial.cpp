#include "annularkh/khovanov.hpp"

namespace annularkh::khovanov {
namespace {

std::string power(char var, int exp) {
    if (exp == 0) return "";
    if (exp == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(exp);
}

}  // namespace

void Polynomial::add(int t_exp, int q_exp, long long coeff) {
    if (coeff == 0) return;
    auto key = std::make_pair(t_exp, q_exp);
    long long& c = terms_[key];
    c += coeff;
    if (c == 0) terms_.erase(key);
}

long long Polynomial::coefficient(int t_exp, int q_exp) const {
    auto it = terms_.find({t_exp, q_exp});
    return it == terms_.end() ? 0 : it->second;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [t, q] = it->first;
        long long c = it->second;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const long long a = c < 0 ? -c : c;
        const std::string mono = power('t', t) + power('q', q);
        if (a != 1 || mono.empty()) out += std::to_string(a);
        out += mono;
    }
    return out;
}

Polynomial euler_characteristic(const TrigradedDims& dims) {
    Polynomial p;
    for (const auto& [deg, d] : dims) p.add(deg.k, deg.j, (deg.i % 2 == 0 ? 1 : -1) * static_cast<long long>(d));
    return p;
}

}  // namespace annularkh::khovanov
