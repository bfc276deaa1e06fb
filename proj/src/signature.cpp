#include "torus/signature.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace torus {

namespace {

Int lcm3(const Int& a, const Int& b, const Int& c) {
    using boost::multiprecision::lcm;
    return lcm(lcm(a, b), c);
}

/// Order-statistic form of the Brieskorn sum: with S the lattice spectrum,
/// sigma(theta) = #{s < 1-theta} - #{1-theta < s < 2-theta} + #{s > 2-theta}.
/// Terms equal to 1-theta or 2-theta are the epsilon = 0 cases.
long long count_signature(const std::vector<Rat>& values, const Rat& theta) {
    const Rat lo = Rat(1) - theta;
    const Rat hi = Rat(2) - theta;
    auto b = values.begin(), e = values.end();
    long long below = std::lower_bound(b, e, lo) - b;
    long long mid_begin = std::upper_bound(b, e, lo) - b;
    long long mid_end = std::lower_bound(b, e, hi) - b;
    long long above = e - std::upper_bound(b, e, hi);
    return below - (mid_end - mid_begin) + above;
}

}  // namespace

LatticeSpectrum LatticeSpectrum::compute(const TorusLink& link) {
    LatticeSpectrum spec{link, {}};
    const long long p = link.p(), q = link.q();
    spec.values.reserve(static_cast<size_t>((p - 1) * (q - 1)));
    for (long long x = 1; x <= q - 1; ++x)
        for (long long y = 1; y <= p - 1; ++y)
            spec.values.push_back(Rat(x, q) + Rat(y, p));
    std::sort(spec.values.begin(), spec.values.end());
    return spec;
}

int epsilon(const Theta& theta, long long x, long long y, const TorusLink& link) {
    const long long p = link.p(), q = link.q();
    if (x < 1 || x > q - 1 || y < 1 || y > p - 1)
        throw std::domain_error("lattice point out of range");
    const Int D = lcm3(theta.denominator(), Int(p), Int(q));
    // N/D = theta + x/q + y/p with N > 0.
    const Int N = theta.numerator() * (D / theta.denominator()) +
                  Int(x) * (D / q) + Int(y) * (D / p);
    const Int m = N % (2 * D);
    if (m % D == 0) return 0;
    return m < D ? +1 : -1;
}

long long signature_at(const TorusLink& link, const Theta& theta) {
    long long sum = 0;
    for (long long x = 1; x <= link.q() - 1; ++x)
        for (long long y = 1; y <= link.p() - 1; ++y)
            sum += epsilon(theta, x, y, link);
    return sum;
}

long long classical_signature(const TorusLink& link) {
    if (link.is_unknot()) return 0;
    return signature_at(link, Theta(1, 2));
}

long long glm_signature(long long p, long long q) {
    if (p < 2) throw std::domain_error("glm_signature requires p >= 2");
    if (q < 1) throw std::domain_error("glm_signature requires q >= 1");
    long long acc = 0;
    while (q > 2 * p) {
        q -= 2 * p;
        acc -= (p % 2 == 1) ? p * p - 1 : p * p;
    }
    return acc + classical_signature(TorusLink(p, q));
}

std::vector<Rat> slope_sequence(long long p) {
    if (p < 2) throw std::domain_error("slope_sequence requires p >= 2");
    std::vector<Rat> slopes;
    for (long long j = 0; j < (p + 1) / 2; ++j)
        slopes.push_back(Rat(-2 * (p - 1 - 2 * j), p));
    return slopes;
}

Rat sigma_chi_limit(long long p) {
    if (p < 2) throw std::domain_error("sigma_chi_limit requires p >= 2");
    if (p % 2 == 1) return Rat(p + 1, 2 * p);
    return Rat(p, 2 * (p - 1));
}

long long SignatureProfile::evaluate(const Rat& theta) const {
    if (theta <= 0 || theta >= 1)
        throw std::domain_error("theta must satisfy 0 < theta < 1");
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), theta);
    size_t idx = it - breakpoints.begin();
    if (it != breakpoints.end() && *it == theta) return breakpoint_values[idx];
    return interval_values[idx];
}

long long SignatureProfile::min_value() const {
    long long m = 0;
    for (long long v : interval_values) m = std::min(m, v);
    for (long long v : breakpoint_values) m = std::min(m, v);
    return m;
}

SignatureProfile compute_profile(const TorusLink& link) {
    SignatureProfile prof{link, {}, {}, {}};
    if (link.is_unknot()) {
        prof.interval_values = {0};
        return prof;
    }
    const long long n = link.p() * link.q();
    const auto spectrum = LatticeSpectrum::compute(link);

    // Candidate breakpoints j/n; value on (j/n, (j+1)/n) read off at the
    // interval midpoint.
    std::vector<long long> interval(n);
    for (long long j = 0; j < n; ++j)
        interval[j] = count_signature(spectrum.values, Rat(2 * j + 1, 2 * n));

    prof.interval_values.push_back(interval[0]);
    for (long long j = 1; j <= n - 1; ++j) {
        const Rat theta(j, n);
        const long long at = count_signature(spectrum.values, theta);
        if (interval[j - 1] == interval[j] && at == interval[j]) continue;
        prof.breakpoints.push_back(theta);
        prof.breakpoint_values.push_back(at);
        prof.interval_values.push_back(interval[j]);
    }
    return prof;
}

namespace {

class ProfileCache {
public:
    std::shared_ptr<const SignatureProfile> get(const TorusLink& link) {
        const auto key = std::make_pair(link.p(), link.q());
        {
            std::lock_guard lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto prof = load_from_disk(link);
        if (!prof) {
            prof = std::make_shared<SignatureProfile>(compute_profile(link));
            store_to_disk(*prof);
        }
        std::lock_guard lock(mutex_);
        auto [it, inserted] = map_.emplace(key, prof);
        return it->second;  // first writer wins; all callers share one copy
    }

private:
    static std::filesystem::path cache_file(const TorusLink& link) {
        const char* dir = std::getenv("TORUS_CACHE_DIR");
        if (!dir || !*dir) return {};
        return std::filesystem::path(dir) /
               (std::to_string(link.p()) + "_" + std::to_string(link.q()) + ".profile");
    }

    // First line: "leading <value>" for the interval next to zero, which is
    // 1 - gcd(p,q). Then one breakpoint per line: num den
    // interval_value_after point_value.
    static std::shared_ptr<SignatureProfile> load_from_disk(const TorusLink& link) {
        auto path = cache_file(link);
        if (path.empty()) return nullptr;
        std::ifstream in(path);
        if (!in) return nullptr;
        std::string tag;
        long long leading;
        if (!(in >> tag >> leading) || tag != "leading") return nullptr;
        auto prof = std::make_shared<SignatureProfile>(
            SignatureProfile{link, {}, {leading}, {}});
        std::string num, den;
        long long after, at;
        while (in >> num >> den >> after >> at) {
            prof->breakpoints.emplace_back(Int(num), Int(den));
            prof->interval_values.push_back(after);
            prof->breakpoint_values.push_back(at);
        }
        if (!in.eof()) return nullptr;
        return prof;
    }

    static void store_to_disk(const SignatureProfile& prof) {
        auto path = cache_file(prof.link);
        if (path.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        std::ofstream out(path);
        if (!out) return;
        out << "leading " << prof.interval_values.front() << '\n';
        for (size_t i = 0; i < prof.breakpoints.size(); ++i)
            out << rat_num(prof.breakpoints[i]) << ' ' << rat_den(prof.breakpoints[i])
                << ' ' << prof.interval_values[i + 1] << ' '
                << prof.breakpoint_values[i] << '\n';
    }

    std::mutex mutex_;
    std::map<std::pair<long long, long long>,
             std::shared_ptr<const SignatureProfile>> map_;
};

ProfileCache& cache() {
    static ProfileCache instance;
    return instance;
}

}  // namespace

std::shared_ptr<const SignatureProfile> profile(const TorusLink& link) {
    return cache().get(link);
}

std::string profile_to_csv(const SignatureProfile& prof) {
    std::ostringstream out;
    out << "theta_numerator,theta_denominator,value_at,value_after\n";
    for (size_t i = 0; i < prof.breakpoints.size(); ++i)
        out << rat_num(prof.breakpoints[i]) << ',' << rat_den(prof.breakpoints[i])
            << ',' << prof.breakpoint_values[i] << ','
            << prof.interval_values[i + 1] << '\n';
    return out.str();
}

std::string profile_to_json(const SignatureProfile& prof) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["p"] = prof.link.p();
    doc["q"] = prof.link.q();
    nlohmann::json bps = nlohmann::json::array();
    for (size_t i = 0; i < prof.breakpoints.size(); ++i) {
        bps.push_back({{"theta_numerator", rat_num(prof.breakpoints[i]).str()},
                       {"theta_denominator", rat_den(prof.breakpoints[i]).str()},
                       {"value_at", prof.breakpoint_values[i]},
                       {"value_after", prof.interval_values[i + 1]}});
    }
    doc["breakpoints"] = std::move(bps);
    doc["interval_values"] = prof.interval_values;
    return doc.dump();
}

}  // namespace torus
