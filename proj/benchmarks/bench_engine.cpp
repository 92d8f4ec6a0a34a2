// Copyright 2026 The star-engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "star/grounding.hpp"
#include "star/parser.hpp"
#include "star/reasoner.hpp"

namespace {

std::string story() {
  std::ifstream in(std::string(STAR_STORIES_DIR) + "/ann_mary.dmn");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A chain of n people walking to the door at successive time-points.
std::string crowd(int n) {
  std::string out = "fluents([in_flat(_), wants(_,_)]).\n";
  for (int i = 0; i < n; ++i) {
    const std::string who = "p" + std::to_string(i);
    out += "s(0) :: in_flat(" + who + ") at " + std::to_string(i) + ".\n";
    out += "s(0) :: walk_to(" + who + ",door) at " + std::to_string(i + 1) + ".\n";
  }
  out += "p(22) :: walk_to(Person,door), in_flat(Person) implies wants(Person,open(door)).\n";
  out += "p(23) :: afraid(Person), in_flat(Person) implies -wants(Person,open(door)).\n";
  out += "p(23) >> p(22).\n";
  return out;
}

void BM_Parse(benchmark::State& state) {
  const std::string text = story();
  for (auto _ : state) benchmark::DoNotOptimize(star::parse_domain(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Parse);

void BM_Ground(benchmark::State& state) {
  const star::Domain d = star::parse_domain(story()).domain;
  for (auto _ : state) benchmark::DoNotOptimize(star::ground_domain(d));
}
BENCHMARK(BM_Ground);

void BM_BuildModel(benchmark::State& state) {
  const star::Domain d = star::parse_domain(crowd(static_cast<int>(state.range(0)))).domain;
  const star::GroundProgram g = star::ground_domain(d);
  const int h = star::compute_horizon(d);
  for (auto _ : state) benchmark::DoNotOptimize(star::build_model(g, 0, h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildModel)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_BuildModelWithReport(benchmark::State& state) {
  const star::Domain d = star::parse_domain(story()).domain;
  const star::GroundProgram g = star::ground_domain(d);
  const int h = star::compute_horizon(d);
  for (auto _ : state) benchmark::DoNotOptimize(star::build_model(g, 0, h, star::TraceSet::all()));
}
BENCHMARK(BM_BuildModelWithReport);

}  // namespace

BENCHMARK_MAIN();
