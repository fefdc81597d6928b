#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exptaylor/expr.hpp"

namespace exptaylor {

struct IdentityResult {
    std::string name;
    Complex computed;
    Complex target;
    long long terms_used = 0;
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string variant;  // sign convention that produced `computed`, when relevant
    std::string note;
};

/// cos(2 pi x) = 1 + sum_{j>=2} (-1)^j/2 (e^{2 pi i x} - 1)^j, |x| < 1/6.
IdentityResult cosine_series(double x, int J);

/// x = sum_{j>=1} (-1)^{j-1}/(2 pi i j) (e^{2 pi i x} - 1)^j, |x| <= 1/6.
IdentityResult linear_series(double x, int J);

/// sum_{j>=1} ((k-1)/k)^j / j = log k.
IdentityResult log_series(int k, int J);

enum class StirlingVariant {
    Signed,             // s(j,k)
    Unsigned,           // |s(j,k)|
    SignedAlternating,  // (-1)^j s(j,k)
    UnsignedAlternating // (-1)^j |s(j,k)|
};

std::string to_string(StirlingVariant v);

/// Sums of Stirling numbers of the first kind evaluated from the expansion of
/// x^k with lambda = log 2:
///   weighted:   sum_{j>=k} term_j / (2^j j!)  -> (-1)^k log(2)^k / k!
///   unweighted: sum_{j>=k} term_j / j!        ->  log(2)^k / k!
/// where term_j is s(j,k) under the chosen sign reading. The unweighted series
/// sits on the boundary of convergence and is accelerated by averaging
/// consecutive partial sums.
IdentityResult stirling_log2_series(int k, bool weighted, int J, StirlingVariant variant);

/// Computes all four sign readings and reports the one closest to the target;
/// `variant` names the reading that matched.
IdentityResult stirling_log2_series(int k, bool weighted, int J);

using ToleranceOverrides = std::map<std::string, double>;

/// Runs every registered identity in registration order. An override key
/// matches either a full entry name or its family (the part before '[').
std::vector<IdentityResult> run_suite(const std::optional<ToleranceOverrides>& overrides = {});

std::size_t failure_count(const std::vector<IdentityResult>& results);

void write_json(std::ostream& out, const std::vector<IdentityResult>& results);
void write_table(std::ostream& out, const std::vector<IdentityResult>& results);

}  // namespace exptaylor
