// Verification suites: symbolic results against brute-force counts. Shared by
// the command-line `verify` subcommand and the acceptance runner.
#pragma once

#include <string>
#include <vector>

namespace hlv {

struct CheckCase {
    std::string name;
    bool ok = false;
    std::string detail; // filled on mismatch
};

std::vector<CheckCase> check_macdonald_axioms_suite(int max_n);
std::vector<CheckCase> check_flags_suite(int max_n, const std::vector<int>& primes);
std::vector<CheckCase> check_mass_suite(int nmax, const std::vector<int>& primes);
std::vector<CheckCase> check_grass_suite(const std::vector<int>& primes);
std::vector<CheckCase> check_hall_suite(int max_n, const std::vector<int>& primes);
std::vector<CheckCase> check_p1_two_point_suite(int nmax, int tmax);
std::vector<CheckCase> check_p1_parabolic_suite(int dmax);
std::vector<CheckCase> check_hlv_integrality_suite(int tmax);
std::vector<CheckCase> check_poincare_suite();
std::vector<CheckCase> check_seriesalg_suite(int samples, unsigned seed);
std::vector<CheckCase> check_springer_suite(int max_n);

bool all_ok(const std::vector<CheckCase>& cases);

} // namespace hlv
