#include "hooklab/catalog.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <sstream>

#include "json.hpp"

namespace hooklab::catalog {

namespace {

RatFun rat(long n, long d = 1) { return RatFun(Rational(n, d)); }

const RatFun& p(const Bindings& b, const char* name) {
    const auto it = b.find(name);
    if (it == b.end()) throw DomainError(std::string("missing binding for parameter ") + name);
    return it->second;
}

long int_param(const Bindings& b, const char* name) {
    const RatFun& v = p(b, name);
    if (!v.is_integer()) throw DomainError(std::string("parameter ") + name + " must be an integer");
    return v.constant_value().to_long();
}

/// prod_{i=1}^{m} f(i) with the Gamma-quotient extension
/// prod_{i=1}^{m} = 1 / prod_{i=m+1}^{0} when m < 0.
RatFun ext_prod(long m, const std::function<RatFun(long)>& f) {
    RatFun acc(1);
    if (m >= 1) {
        for (long i = 1; i <= m; ++i) acc *= f(i);
        return acc;
    }
    for (long i = m + 1; i <= 0; ++i) acc *= f(i);
    return acc.reciprocal();
}

std::function<TruncSeries(int, const Bindings&)> expr_gf(std::string text) {
    return [text = std::move(text)](int order, const Bindings& b) {
        expr::EvalEnv env;
        env.bindings = b;
        return expr::eval_series(text, order, env);
    };
}

/// Series whose nth coefficient is produced by `coeff`; constant term is 1.
std::function<TruncSeries(int, const Bindings&)> coefficient_gf(
    std::function<RatFun(int, const Bindings&)> coeff) {
    return [coeff = std::move(coeff)](int order, const Bindings& b) {
        TruncSeries s(order);
        s.at(0) = RatFun(1);
        for (int n = 1; n <= order; ++n) s.at(n) = coeff(n, b);
        return s;
    };
}

FormulaEntry entry(std::string id, StructureKind kind, FormulaStatus status,
                   std::string weight_text, std::string gf_text,
                   std::function<RatFun(int, const Bindings&)> weight,
                   std::function<TruncSeries(int, const Bindings&)> gf,
                   std::vector<std::string> symbolic = {}, std::string instance_param = "",
                   std::vector<long> instances = {}, std::string citation = "") {
    FormulaEntry e;
    e.id = std::move(id);
    e.kind = kind;
    e.status = status;
    e.weight_text = std::move(weight_text);
    e.gf_text = std::move(gf_text);
    e.weight = std::move(weight);
    e.gf = std::move(gf);
    e.symbolic_params = std::move(symbolic);
    e.instance_param = std::move(instance_param);
    e.instances = std::move(instances);
    e.citation = std::move(citation);
    e.default_order = kind == StructureKind::Partition ? 18 : 24;
    return e;
}

std::vector<FormulaEntry> build_catalog() {
    std::vector<FormulaEntry> cat;
    const std::vector<long> t_values = {1, 2, 3, 4};

    // -- Partitions ---------------------------------------------------------

    cat.push_back(entry(
        "EQ_2_3", StructureKind::Partition, FormulaStatus::Classical,
        "rho(h) = 1/h^2", "exp(x)",
        [](int h, const Bindings&) { return rat(1, static_cast<long>(h) * h); },
        expr_gf("exp(x)"), {}, "", {},
        "Frame-Robinson-Thrall hook formula summed over shapes"));

    cat.push_back(entry(
        "EQ_2_4", StructureKind::Partition, FormulaStatus::Classical,
        "rho(h) = 1/h", "exp(x+x^2/2)",
        [](int h, const Bindings&) { return rat(1, h); },
        expr_gf("exp(x+x^2/2)"), {}, "", {},
        "involution generating function"));

    cat.push_back(entry(
        "EQ_2_5", StructureKind::Partition, FormulaStatus::Classical,
        "rho(h) = 1", "product(1/(1-x^k), k=1..9)",
        [](int, const Bindings&) { return rat(1); },
        expr_gf("product(1/(1-x^k), k=1..9)"), {}, "", {},
        "Euler partition generating function"));

    cat.push_back(entry(
        "THM_5_1", StructureKind::Partition, FormulaStatus::Proved,
        "rho(h) = 1 - beta/h^2", "product((1-x^k)^(beta-1), k=1..18)",
        [](int h, const Bindings& b) {
            return rat(1) - p(b, "beta") * rat(1, static_cast<long>(h) * h);
        },
        expr_gf("product((1-x^k)^(beta-1), k=1..18)"), {"beta"}, "", {},
        "Nekrasov-Okounkov identity"));

    {
        FormulaEntry e = entry(
            "CONJ_5_2", StructureKind::Partition, FormulaStatus::Conjecture,
            "rho(z;h) = sum(C(h,2k) z^k) / (h*sum(C(h,2k+1) z^k))", "exp(x+z*x^2/2)",
            [](int h, const Bindings& b) {
                const RatFun& z = p(b, "z");
                RatFun num, den, zp(1);
                for (int k = 0; 2 * k <= h; ++k) {
                    num += zp.scaled_by(Rational::binomial(h, 2 * k));
                    if (2 * k + 1 <= h) den += zp.scaled_by(Rational::binomial(h, 2 * k + 1));
                    zp *= z;
                }
                return num / (rat(h) * den);
            },
            expr_gf("exp(x+z*x^2/2)"), {"z"}, "", {},
            "interpolates between the permutation and involution expansions");
        e.default_order = 10;
        cat.push_back(std::move(e));
    }

    cat.push_back(entry(
        "THM_5_3", StructureKind::Partition, FormulaStatus::Proved,
        "rho(h) = 1 - t*z/h^2 when t | h, else 1", "product((1-x^(t*k))^z/(1-x^k), k=1..13)",
        [](int h, const Bindings& b) {
            const long t = int_param(b, "t");
            if (h % t != 0) return rat(1);
            return rat(1) - p(b, "z") * rat(t, static_cast<long>(h) * h);
        },
        expr_gf("product((1-x^(t*k))^z/(1-x^k), k=1..13)"), {"z"}, "t", t_values,
        "t-core interpolation"));

    cat.push_back(entry(
        "THM_5_4", StructureKind::Partition, FormulaStatus::Proved,
        "rho(h) = -1 for odd h, 1 - 2*z/h^2 for even h",
        "product((1-x^k)*(1-x^(4*k))^(3*z-5)/((1-x^(8*k))^(z-2)*(1-x^(2*k))^(z-1)), k=1..17)",
        [](int h, const Bindings& b) {
            if (h % 2 == 1) return rat(-1);
            return rat(1) - p(b, "z") * rat(2, static_cast<long>(h) * h);
        },
        expr_gf("product((1-x^k)*(1-x^(4*k))^(3*z-5)/((1-x^(8*k))^(z-2)*(1-x^(2*k))^(z-1)), k=1..17)"),
        {"z"}));

    cat.push_back(entry(
        "THM_5_5", StructureKind::Partition, FormulaStatus::Proved,
        "rho(h) = -1 when t | h, else 1",
        "product((1-x^(4*t*k))^t*(1-x^(t*k))^(2*t)/((1-x^(2*t*k))^(3*t)*(1-x^k)), k=1..17)",
        [](int h, const Bindings& b) {
            return h % int_param(b, "t") == 0 ? rat(-1) : rat(1);
        },
        expr_gf("product((1-x^(4*t*k))^t*(1-x^(t*k))^(2*t)/((1-x^(2*t*k))^(3*t)*(1-x^k)), k=1..17)"),
        {}, "t", t_values, "signed count of hooks divisible by t"));

    cat.push_back(entry(
        "THM_5_6", StructureKind::Partition, FormulaStatus::Proved,
        "rho(h) = z when t | h, else 1",
        "product((1-x^(t*k))^t/((1-(z*x^t)^k)^t*(1-x^k)), k=1..15)",
        [](int h, const Bindings& b) {
            return h % int_param(b, "t") == 0 ? p(b, "z") : rat(1);
        },
        expr_gf("product((1-x^(t*k))^t/((1-(z*x^t)^k)^t*(1-x^k)), k=1..15)"), {"z"}, "t",
        t_values, "z marks hooks divisible by t"));

    cat.push_back(entry(
        "THM_5_7", StructureKind::Partition, FormulaStatus::Proved,
        "rho(h) = y - t*y*z/h^2 when t | h, else 1",
        "product((1-x^(t*k))^t/((1-(y*x^t)^k)^(t-z)*(1-x^k)), k=1..14)",
        [](int h, const Bindings& b) {
            const long t = int_param(b, "t");
            if (h % t != 0) return rat(1);
            const RatFun& y = p(b, "y");
            return y - y * p(b, "z") * rat(t, static_cast<long>(h) * h);
        },
        expr_gf("product((1-x^(t*k))^t/((1-(y*x^t)^k)^(t-z)*(1-x^k)), k=1..14)"), {"y", "z"},
        "t", t_values, "master two-parameter Euler-product expansion"));

    cat.push_back(entry(
        "THM_5_8", StructureKind::Partition, FormulaStatus::Proved,
        "rho(h) = 1 - 2/h^2 for even h, 1 for odd h", "product(1+x^k, k=1..14)",
        [](int h, const Bindings&) {
            if (h % 2 == 1) return rat(1);
            return rat(1) - rat(2, static_cast<long>(h) * h);
        },
        expr_gf("product(1+x^k, k=1..14)"), {}, "", {}, "distinct-part partitions"));

    cat.push_back(entry(
        "THM_5_9", StructureKind::Partition, FormulaStatus::Proved,
        "rho(h) = 1 - 2/h^2", "product(1-x^k, k=1..15)",
        [](int h, const Bindings&) { return rat(1) - rat(2, static_cast<long>(h) * h); },
        expr_gf("product(1-x^k, k=1..15)"), {}, "", {}, "Euler function expansion"));

    cat.push_back(entry(
        "THM_5_10", StructureKind::Partition, FormulaStatus::Proved,
        "rho(1) = z, rho(h) = 1 for h >= 2", "product((1+(z-1)*x^k)/(1-x^k), k=1..8)",
        [](int h, const Bindings& b) { return h == 1 ? p(b, "z") : rat(1); },
        expr_gf("product((1+(z-1)*x^k)/(1-x^k), k=1..8)"), {"z"}, "", {},
        "z marks corners; coefficients are OEIS A116608"));

    cat.push_back(entry(
        "THM_5_11", StructureKind::Partition, FormulaStatus::Proved,
        "rho(t) = 2, rho(h) = 1 otherwise", "product((1+x^(t*k))^t/(1-x^k), k=1..8)",
        [](int h, const Bindings& b) { return h == int_param(b, "t") ? rat(2) : rat(1); },
        expr_gf("product((1+x^(t*k))^t/(1-x^k), k=1..8)"), {}, "t", t_values,
        "doubling the hooks of one fixed length"));

    cat.push_back(entry(
        "THM_5_12", StructureKind::Partition, FormulaStatus::Proved,
        "rho(t) = z, rho(h) = 1 otherwise", "product((1+(z-1)*x^(t*k))^t/(1-x^k), k=1..10)",
        [](int h, const Bindings& b) { return h == int_param(b, "t") ? p(b, "z") : rat(1); },
        expr_gf("product((1+(z-1)*x^(t*k))^t/(1-x^k), k=1..10)"), {"z"}, "t", t_values,
        "z marks hooks of one fixed length (via the t-core/t-quotient bijection)"));

    // -- Binary trees -------------------------------------------------------

    cat.push_back(entry(
        "THM_6_1", StructureKind::BinaryTree, FormulaStatus::Classical,
        "rho(h) = 1/h", "1/(1-x)",
        [](int h, const Bindings&) { return rat(1, h); },
        expr_gf("1/(1-x)"), {}, "", {}, "labeled binary trees vs permutations"));

    cat.push_back(entry(
        "THM_6_2", StructureKind::BinaryTree, FormulaStatus::Classical,
        "rho(h) = 1", "(1-sqrt(1-4*x))/(2*x)",
        [](int, const Bindings&) { return rat(1); },
        expr_gf("(1-sqrt(1-4*x))/(2*x)"), {}, "", {}, "Catalan numbers"));

    cat.push_back(entry(
        "THM_6_3", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(h) = 1/(h*2^(h-1))", "exp(x)",
        [](int h, const Bindings&) { return rat(1, h) * rat(2).pow(1 - h); },
        expr_gf("exp(x)"), {}, "", {}, "exponential hook weight for binary trees"));

    cat.push_back(entry(
        "THM_6_4", StructureKind::BinaryTree, FormulaStatus::Classical,
        "rho(h) = 1 + 1/h", "sum((n+1)^(n-1)*(2*x)^n/n!, n>=0)",
        [](int h, const Bindings&) { return rat(1) + rat(1, h); },
        coefficient_gf([](int n, const Bindings&) {
            return RatFun(Rational(n + 1).pow(n - 1) * Rational(2).pow(n) /
                          Rational::factorial(n));
        }),
        {}, "", {}, "Postnikov's hook length formula"));

    cat.push_back(entry(
        "THM_6_5", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(h) = (z+h)^(h-1)/(h*(2*z+h-1)^(h-2))", "sum(z*(z+n)^(n-1)*(2*x)^n/n!, n>=0)",
        [](int h, const Bindings& b) {
            const RatFun& z = p(b, "z");
            return (z + rat(h)).pow(h - 1) / (rat(h) * (z.scaled_by(Rational(2)) + rat(h - 1)).pow(h - 2));
        },
        coefficient_gf([](int n, const Bindings& b) {
            const RatFun& z = p(b, "z");
            return (z * (z + rat(n)).pow(n - 1))
                .scaled_by(Rational(2).pow(n) / Rational::factorial(n));
        }),
        {"z"}, "", {}, "tree-function power expansion"));

    cat.push_back(entry(
        "THM_6_6", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(h) = prod(z+i, i=1..h-1)/(2*h*prod(2*z+i, i=1..h-2))", "1/(1-x)^z",
        [](int h, const Bindings& b) {
            const RatFun z = p(b, "z");
            const RatFun num = ext_prod(h - 1, [&](long i) { return z + rat(i); });
            const RatFun den = ext_prod(h - 2, [&](long i) { return z.scaled_by(Rational(2)) + rat(i); });
            return num / (rat(2L * h) * den);
        },
        expr_gf("1/(1-x)^z"), {"z"}, "", {}, "generalizes rho(h) = 6/(h*(h+2)) at z = 2"));

    cat.push_back(entry(
        "THM_6_7", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(h) = prod(z+2*h-i, i=1..h-1)/(2*h*prod(2*z+2*h-2-i, i=1..h-2))",
        "((1-sqrt(1-4*x))/(2*x))^z",
        [](int h, const Bindings& b) {
            const RatFun z = p(b, "z");
            const RatFun num = ext_prod(h - 1, [&](long i) { return z + rat(2L * h - i); });
            const RatFun den =
                ext_prod(h - 2, [&](long i) { return z.scaled_by(Rational(2)) + rat(2L * h - 2 - i); });
            return num / (rat(2L * h) * den);
        },
        expr_gf("((1-sqrt(1-4*x))/(2*x))^z"), {"z"}, "", {},
        "generalizes rho(h) = (h+3)/(2*h) at z = 2"));

    cat.push_back(entry(
        "THM_6_8", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(h) = prod(z*a+z+(2*h-i)*a+i, i=1..h-1)/(2*h*prod(2*z*a+2*z+(2*h-2-i)*a+i, i=1..h-2))",
        "sum(z*(a+1)/n!*prod(z*a+z+(2*n-i)*a+i, i=1..n-1)*x^n, n>=0)",
        [](int h, const Bindings& b) {
            const RatFun z = p(b, "z");
            const RatFun a = p(b, "a");
            const RatFun num = ext_prod(h - 1, [&](long i) {
                return z * a + z + a.scaled_by(Rational(2L * h - i)) + rat(i);
            });
            const RatFun den = ext_prod(h - 2, [&](long i) {
                return (z * a + z).scaled_by(Rational(2)) + a.scaled_by(Rational(2L * h - 2 - i)) + rat(i);
            });
            return num / (rat(2L * h) * den);
        },
        coefficient_gf([](int n, const Bindings& b) {
            const RatFun z = p(b, "z");
            const RatFun a = p(b, "a");
            RatFun acc = (z * (a + rat(1))).scaled_by(Rational(1) / Rational::factorial(n));
            for (long i = 1; i <= n - 1; ++i)
                acc *= z * a + z + a.scaled_by(Rational(2L * n - i)) + rat(i);
            return acc;
        }),
        {"z", "a"}, "", {}, "two-parameter unification of the binary-tree formulas"));

    cat.push_back(entry(
        "THM_6_9", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(1) = z, rho(h) = 1/(2*h*z) for even h, z/(h*(1+z^2)) for odd h >= 3",
        "z*tan(x)+sec(x)",
        [](int h, const Bindings& b) {
            const RatFun& z = p(b, "z");
            if (h == 1) return z;
            if (h % 2 == 0) return rat(1) / (rat(2L * h) * z);
            return z / (rat(h) * (rat(1) + z * z));
        },
        expr_gf("z*tan(x)+sec(x)"), {"z"}, "", {}, "alternating-permutation weight"));

    cat.push_back(entry(
        "THM_6_10", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(h) = -1/h for even h, 1 for odd h", "(1+x)/(1+x^2)",
        [](int h, const Bindings&) { return h % 2 == 0 ? rat(-1, h) : rat(1); },
        expr_gf("(1+x)/(1+x^2)")));

    cat.push_back(entry(
        "THM_6_11", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(3k-2) = 1/k, rho(3k-1) = 0, rho(3k) = -1/k", "(1+x)/(1+x^3)",
        [](int h, const Bindings&) {
            if (h % 3 == 1) return rat(1, (h + 2) / 3);
            if (h % 3 == 2) return rat(0);
            return rat(-1, h / 3);
        },
        expr_gf("(1+x)/(1+x^3)")));

    cat.push_back(entry(
        "THM_6_12", StructureKind::BinaryTree, FormulaStatus::Proved,
        "rho(1) = 1, rho(h) = 2 for h >= 2", "(1-sqrt(1-8*x*(1-x)))/(4*x)",
        [](int h, const Bindings&) { return h == 1 ? rat(1) : rat(2); },
        expr_gf("(1-sqrt(1-8*x*(1-x)))/(4*x)"), {}, "", {},
        "generalized Catalan numbers, OEIS A068764"));

    cat.push_back(entry(
        "THM_6_13", StructureKind::BinaryTree, FormulaStatus::Classical,
        "rho(1) = z, rho(h) = 1 for h >= 2",
        "sum(2^(n+1-2*j)*(n-1)!/(j!*(j-1)!*(n+1-2*j)!)*x^n*z^j, n>=0, j>=1)",
        [](int h, const Bindings& b) { return h == 1 ? p(b, "z") : rat(1); },
        coefficient_gf([](int n, const Bindings& b) {
            const RatFun& z = p(b, "z");
            RatFun acc;
            RatFun zp = z;
            for (int j = 1; 2 * j <= n + 1; ++j) {
                const Rational a = Rational(2).pow(n + 1 - 2 * j) * Rational::factorial(n - 1) /
                                   (Rational::factorial(j) * Rational::factorial(j - 1) *
                                    Rational::factorial(n + 1 - 2 * j));
                acc += zp.scaled_by(a);
                zp *= z;
            }
            return acc;
        }),
        {"z"}, "", {}, "Prodinger's leaf-count refinement of the Catalan numbers"));

    // -- Complete binary trees ----------------------------------------------

    cat.push_back(entry(
        "THM_7_1", StructureKind::CompleteBinaryTree, FormulaStatus::Proved,
        "rho(1) = z, rho(h) = 1/(z*h) for h >= 2", "z*tan(x)+sec(x)",
        [](int h, const Bindings& b) {
            const RatFun& z = p(b, "z");
            return h == 1 ? z : rat(1) / (z * rat(h));
        },
        expr_gf("z*tan(x)+sec(x)"), {"z"}, "", {},
        "Euler numbers count increasing complete binary trees"));

    cat.push_back(entry(
        "THM_7_2", StructureKind::CompleteBinaryTree, FormulaStatus::Proved,
        "rho(1) = 1, rho(h) = 1/(h*2^(h-2)) for h >= 2", "exp(x)",
        [](int h, const Bindings&) {
            return h == 1 ? rat(1) : rat(1, h) * rat(2).pow(2 - h);
        },
        expr_gf("exp(x)")));

    cat.push_back(entry(
        "THM_7_3", StructureKind::CompleteBinaryTree, FormulaStatus::Proved,
        "rho(1) = 1, rho(2k) = rho(2k+1) = 1/k", "1/(1-x)",
        [](int h, const Bindings&) { return h == 1 ? rat(1) : rat(1, h / 2); },
        expr_gf("1/(1-x)"), {}, "", {}, "leaf deletion halves complete binary trees"));

    cat.push_back(entry(
        "THM_7_4", StructureKind::CompleteBinaryTree, FormulaStatus::Proved,
        "rho(1) = z, rho(h) = 1/z for h >= 2", "(1-sqrt(1-4*x^2))/(2*x^2)*(1+z*x)",
        [](int h, const Bindings& b) {
            const RatFun& z = p(b, "z");
            return h == 1 ? z : rat(1) / z;
        },
        expr_gf("(1-sqrt(1-4*x^2))/(2*x^2)*(1+z*x)"), {"z"}, "", {},
        "Catalan pairs 1,1,1,1,2,2,5,5,..."));

    cat.push_back(entry(
        "THM_7_5", StructureKind::CompleteBinaryTree, FormulaStatus::Proved,
        "rho(1) = 1, rho(2k) = rho(2k+1) = -1/k", "(1+x)/(1+x^2)",
        [](int h, const Bindings&) { return h == 1 ? rat(1) : rat(-1, h / 2); },
        expr_gf("(1+x)/(1+x^2)")));

    cat.push_back(entry(
        "THM_7_6", StructureKind::CompleteBinaryTree, FormulaStatus::Proved,
        "rho(1) = 1, rho(3k-1) = 0, rho(6k-3) = rho(6k) = -1/k, rho(6k-2) = rho(6k+1) = 1/k",
        "(1+x)/(1+x^3)",
        [](int h, const Bindings&) {
            if (h == 1) return rat(1);
            switch (h % 6) {
            case 2: case 5: return rat(0);
            case 3: return rat(-1, (h + 3) / 6);
            case 0: return rat(-1, h / 6);
            case 4: return rat(1, (h + 2) / 6);
            default: return rat(1, (h - 1) / 6);  // h = 6k+1
            }
        },
        expr_gf("(1+x)/(1+x^3)")));

    // -- Fibonacci trees ----------------------------------------------------

    cat.push_back(entry(
        "THM_8_1", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(h) = 1", "1/(1-x-x^2)",
        [](int, const Bindings&) { return rat(1); },
        expr_gf("1/(1-x-x^2)"), {}, "", {}, "Fibonacci numbers"));

    cat.push_back(entry(
        "THM_8_2", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(h) = 1/h^2", "exp(x)",
        [](int h, const Bindings&) { return rat(1, static_cast<long>(h) * h); },
        expr_gf("exp(x)"), {}, "", {}, "pairs of increasing Fibonacci trees"));

    cat.push_back(entry(
        "THM_8_3", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(h) = 1/h", "exp(x+x^2/2)",
        [](int h, const Bindings&) { return rat(1, h); },
        expr_gf("exp(x+x^2/2)"), {}, "", {}, "involutions count increasing Fibonacci trees"));

    cat.push_back(entry(
        "THM_8_4", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(1) = 1, rho(h) = 1/2 for h >= 2", "1/(1-x)",
        [](int h, const Bindings&) { return h == 1 ? rat(1) : rat(1, 2); },
        expr_gf("1/(1-x)")));

    cat.push_back(entry(
        "THM_8_5", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(h) = (h+z-1)*(h+z-2)/(h*(h*z+h-2))", "1/(1-x)^z",
        [](int h, const Bindings& b) {
            const RatFun& z = p(b, "z");
            return (rat(h) + z - rat(1)) * (rat(h) + z - rat(2)) /
                   (rat(h) * (z.scaled_by(Rational(h)) + rat(h - 2)));
        },
        expr_gf("1/(1-x)^z"), {"z"}, "", {}, "binomial-coefficient weight"));

    cat.push_back(entry(
        "THM_8_6", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(1) = 1, rho(h) = 4*(2*h-1)*(2*h-3)/((h+1)*(5*h-6)) for h >= 2",
        "(1-sqrt(1-4*x))/(2*x)",
        [](int h, const Bindings&) {
            if (h == 1) return rat(1);
            return rat(4) * rat(2L * h - 1) * rat(2L * h - 3) / (rat(h + 1) * rat(5L * h - 6));
        },
        expr_gf("(1-sqrt(1-4*x))/(2*x)"), {}, "", {}, "Catalan numbers from Fibonacci trees"));

    cat.push_back(entry(
        "THM_8_7", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(h) = (z+2h-4)(z+2h-3)(z+2h-2)(z+2h-1)/(h*(z+h-2)*(z+h)*(h*z+4*h-6))",
        "((1-sqrt(1-4*x))/(2*x))^z",
        [](int h, const Bindings& b) {
            const RatFun& z = p(b, "z");
            RatFun num(1);
            for (long s = 4; s >= 1; --s) num *= z + rat(2L * h - s);
            const RatFun den = rat(h) * (z + rat(h - 2)) * (z + rat(h)) *
                               (z.scaled_by(Rational(h)) + rat(4L * h - 6));
            return num / den;
        },
        expr_gf("((1-sqrt(1-4*x))/(2*x))^z"), {"z"}, "", {}, "Catalan power expansion"));

    cat.push_back(entry(
        "THM_8_8", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(1) = z, rho(2k) = (2k-1)/((k+1)*z), rho(2k+1) = 2*(2k-1)*z/((k+1)*z^2+2*(2k-1))",
        "(1-sqrt(1-4*x^2))/(2*x^2)*(1+z*x)",
        [](int h, const Bindings& b) {
            const RatFun& z = p(b, "z");
            if (h == 1) return z;
            if (h % 2 == 0) {
                const long k = h / 2;
                return rat(2 * k - 1) / (rat(k + 1) * z);
            }
            const long k = (h - 1) / 2;
            return (z.scaled_by(Rational(2 * (2 * k - 1)))) /
                   ((z * z).scaled_by(Rational(k + 1)) + rat(2 * (2 * k - 1)));
        },
        expr_gf("(1-sqrt(1-4*x^2))/(2*x^2)*(1+z*x)"), {"z"}));

    cat.push_back(entry(
        "THM_8_9", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(h) = 1, 0, -1 for h = 1, 2, 0 mod 3", "(1+x)/(1+x^3)",
        [](int h, const Bindings&) {
            if (h % 3 == 1) return rat(1);
            if (h % 3 == 2) return rat(0);
            return rat(-1);
        },
        expr_gf("(1+x)/(1+x^3)")));

    cat.push_back(entry(
        "THM_8_10", StructureKind::FibonacciTree, FormulaStatus::Proved,
        "rho(1) = z, rho(h) = 1 for h >= 2", "(1+(z-1)*x)/(1-x-z*x^2)",
        [](int h, const Bindings& b) { return h == 1 ? p(b, "z") : rat(1); },
        expr_gf("(1+(z-1)*x)/(1-x-z*x^2)"), {"z"}, "", {},
        "z marks leaves, OEIS A129710"));

    return cat;
}

} // namespace

std::string status_name(FormulaStatus s) {
    switch (s) {
    case FormulaStatus::Classical: return "classical";
    case FormulaStatus::Proved: return "proved";
    case FormulaStatus::Conjecture: return "conjecture";
    }
    return "?";
}

WeightTable FormulaEntry::weight_table(int order, const Bindings& b) const {
    WeightTable rho;
    rho.values.reserve(static_cast<std::size_t>(order));
    for (int h = 1; h <= order; ++h) rho.values.push_back(weight(h, b));
    return rho;
}

Bindings FormulaEntry::bindings_for(std::optional<long> instance) const {
    Bindings b;
    for (const auto& name : symbolic_params) b[name] = RatFun::variable(name);
    if (instance && !instance_param.empty()) b[instance_param] = RatFun(Rational(*instance));
    return b;
}

const std::vector<FormulaEntry>& builtin_catalog() {
    static const std::vector<FormulaEntry> cat = build_catalog();
    return cat;
}

const FormulaEntry* find_entry(const std::string& id) {
    for (const auto& e : builtin_catalog())
        if (e.id == id) return &e;
    return nullptr;
}

EntryReport verify_entry(const FormulaEntry& e, int order) {
    EntryReport report;
    report.id = e.id;
    report.status = e.status;
    report.order = order > 0 ? order : e.default_order;
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::optional<long>> instances;
    if (e.instance_param.empty()) instances.push_back(std::nullopt);
    else for (long v : e.instances) instances.push_back(v);

    report.pass = true;
    try {
        for (const auto& inst : instances) {
            InstanceResult res;
            if (inst) res.label = e.instance_param + "=" + std::to_string(*inst);
            const Bindings b = e.bindings_for(inst);
            const TruncSeries lhs = hookgen(e.kind, e.weight_table(report.order, b), report.order);
            const TruncSeries rhs = e.gf(report.order, b);
            res.pass = true;
            for (int k = 0; k <= report.order; ++k) {
                if (lhs[k] == rhs[k]) continue;
                res.pass = false;
                res.mismatch_index = k;
                res.lhs = lhs[k].str();
                res.rhs = rhs[k].str();
                break;
            }
            report.pass = report.pass && res.pass;
            report.results.push_back(std::move(res));
        }
    } catch (const Error& err) {
        report.pass = false;
        report.error = err.what();
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerifySummary verify_all(int order, int jobs, const std::string& only_id) {
    std::vector<const FormulaEntry*> todo;
    for (const auto& e : builtin_catalog())
        if (only_id.empty() || e.id == only_id) todo.push_back(&e);
    if (!only_id.empty() && todo.empty())
        throw DomainError("no catalog entry with id '" + only_id + "'");

    std::vector<EntryReport> reports(todo.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < todo.size(); ++i) reports[i] = verify_entry(*todo[i], order);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= todo.size()) return;
                reports[i] = verify_entry(*todo[i], order);
            }
        };
        std::vector<std::future<void>> pool;
        const int n_workers = std::min<int>(jobs, static_cast<int>(todo.size()));
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int i = 0; i < n_workers; ++i)
            pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    }

    VerifySummary summary;
    summary.reports = std::move(reports);
    for (const auto& r : summary.reports) {
        if (r.pass) ++summary.passed;
        else if (r.status == FormulaStatus::Conjecture) ++summary.conjectures_failed;
        else ++summary.failed;
    }
    return summary;
}

std::string catalog_json() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : builtin_catalog()) {
        nlohmann::json j;
        j["id"] = e.id;
        j["kind"] = structure_code(e.kind);
        j["weight"] = e.weight_text;
        j["gf"] = e.gf_text;
        j["status"] = status_name(e.status);
        j["params"] = e.symbolic_params;
        if (!e.instance_param.empty()) {
            j["instance_param"] = e.instance_param;
            j["instances"] = e.instances;
        }
        j["default_order"] = e.default_order;
        if (!e.citation.empty()) j["citation"] = e.citation;
        out.push_back(std::move(j));
    }
    return out.dump(2);
}

} // namespace hooklab::catalog
