#include <benchmark/benchmark.h>

#include "cli.hpp"
#include "stems/calculators.hpp"
#include "stems/fixed_points.hpp"
#include "stems/oracle.hpp"

using namespace stems;

namespace {

VirtualRep sample_rep(Group g) {
    VirtualRep u(g);
    switch (g) {
        case Group::SO2:
        case Group::Spin2:
            u.add(Irreducible::z(1), -2);
            u.add(Irreducible::z(5), 3);
            u.add(Irreducible::z(12), 1);
            break;
        case Group::O2:
            u.add(Irreducible::delta(), 3);
            u.add(Irreducible::sigma(2), -1);
            u.add(Irreducible::sigma(9), 2);
            break;
        case Group::Pin2:
            u.add(Irreducible::delta(), 1);
            u.add(Irreducible::sigma(4), -2);
            u.add(Irreducible::h(7), 1);
            break;
        case Group::SO3:
            u.add(Irreducible::w(5), 2);
            u.add(Irreducible::w(13), -1);
            break;
        case Group::SU2:
            u.add(Irreducible::w(7), 1);
            u.add(Irreducible::v(10), -2);
            break;
    }
    return u;
}

void BM_FullAnswer(benchmark::State& state) {
    Group g = static_cast<Group>(state.range(0));
    VirtualRep u = sample_rep(g);
    for (auto _ : state) benchmark::DoNotOptimize(stems::stems(u));
    state.SetLabel(group_name(g));
}

void BM_OracleWindow(benchmark::State& state) {
    VirtualRep u = sample_rep(Group::O2);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::oracle_o2_cyclic(u, -25, 25, state.range(0)));
}

void BM_CharacterAverage(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fixed_dim(state.range(0), RotationGroup::A5));
}

void BM_MatrixRecount(benchmark::State& state) {
    oracle::rotation_group_elements(RotationGroup::A5); // enumerate outside the loop
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::oracle_char_matrix(RotationGroup::A5, state.range(0)));
}

void BM_ParseAndRender(benchmark::State& state) {
    for (auto _ : state) {
        VirtualRep u = cli::parse_rep("2*W(5)-W(13)+3*W(3)", Group::SO3);
        benchmark::DoNotOptimize(cli::render_table(stems::stems(u), -10, 20, true));
    }
}

} // namespace

BENCHMARK(BM_FullAnswer)->DenseRange(0, 5, 1);
BENCHMARK(BM_OracleWindow)->Arg(64)->Arg(256);
BENCHMARK(BM_CharacterAverage)->Arg(6)->Arg(20);
BENCHMARK(BM_MatrixRecount)->Arg(6)->Arg(20);
BENCHMARK(BM_ParseAndRender);

BENCHMARK_MAIN();
