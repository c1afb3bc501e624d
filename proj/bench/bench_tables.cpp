// Serial reference against the OpenMP kernels: table construction,
// validation and classification, with results compared for equality.

#include "pconst/builtin_tables.hpp"
#include "pconst/char_table.hpp"
#include "pconst/monomial.hpp"
#include "pconst/symmetric.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace pconst;

namespace {

double seconds(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const CharTable& a, const CharTable& b) {
    if (a.num_chars() != b.num_chars() || a.num_classes() != b.num_classes()) return false;
    for (std::size_t i = 0; i < a.num_chars(); ++i)
        if (a.irreducibles[i].values != b.irreducibles[i].values) return false;
    return true;
}

void row(const std::string& what, double serial, double parallel, bool agree) {
    std::printf("%-28s %10.3f %10.3f %8.2fx  %s\n", what.c_str(), serial, parallel, serial / parallel, agree ? "equal" : "DIFFER");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %10s %10s %9s\n", "task", "serial s", "parallel s", "speedup");
    bool all = true;

    for (int n : {10, 12, 14}) {
        CharTable s, p;
        const double ts = seconds([&] { s = sym_char_table(n, Exec::Serial); });
        const double tp = seconds([&] { p = sym_char_table(n, Exec::Parallel); });
        all = all && same(s, p);
        row("Sym" + std::to_string(n) + " table", ts, tp, same(s, p));

        bool vs = false, vp = false;
        const double ws = seconds([&] { vs = validate(p, Exec::Serial).ok(); });
        const double wp = seconds([&] { vp = validate(p, Exec::Parallel).ok(); });
        all = all && vs && vp;
        row("Sym" + std::to_string(n) + " validate", ws, wp, vs == vp);
    }

    for (auto [name, n] : {std::pair{"C2", 7}, std::pair{"C3", 4}, std::pair{"Sym3", 3}}) {
        const CharTable h = builtin_table(name);
        CharTable s, p;
        const double ts = seconds([&] { s = wreath_char_table(h, n, Exec::Serial); });
        const double tp = seconds([&] { p = wreath_char_table(h, n, Exec::Parallel); });
        all = all && same(s, p);
        row(std::string(name) + " wr Sym" + std::to_string(n) + " table", ts, tp, same(s, p));

        bool agree = true;
        const auto primes = prime_divisors(p.order);
        const double us = seconds([&] {
            for (auto q : primes) (void)upsilon_p(p, q, Exec::Serial);
        });
        const double up = seconds([&] {
            for (auto q : primes) (void)upsilon_p(p, q, Exec::Parallel);
        });
        for (auto q : primes) {
            const auto a = upsilon_p(p, q, Exec::Serial), b = upsilon_p(p, q, Exec::Parallel);
            for (std::size_t i = 0; i < a.size(); ++i) agree = agree && a[i].verdict == b[i].verdict && a[i].constant == b[i].constant;
        }
        all = all && agree;
        row(std::string(name) + " wr Sym" + std::to_string(n) + " upsilon", us, up, agree);
    }
    return all ? 0 : 1;
}
