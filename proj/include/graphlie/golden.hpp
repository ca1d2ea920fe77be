#pragma once

#include <string>
#include <vector>

#include "graphlie/graphs.hpp"
#include "graphlie/tensor.hpp"

namespace graphlie::golden {

struct ExampleResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The worked examples the library is checked against: dimension profiles,
/// torsion, kernel tables, defect witnesses over F2 and F4, and the
/// cohomology product identities. Every entry must pass.
std::vector<ExampleResult> run_examples(size_t budget = tensor::kDefaultBudget);

bool all_pass(const std::vector<ExampleResult>& results);

// Common graphs, shared with tests and the CLI.
namespace fixtures {
graphs::MixedGraph lambda_s();
graphs::MixedGraph square_c4();
graphs::MixedGraph path_p4();
graphs::MixedGraph single_directed_edge();
graphs::MixedGraph product_with_line();   // v -> w with a central plain vertex z
graphs::MixedGraph oriented_triangle();
graphs::MixedGraph directed_star(int rays);
graphs::MixedGraph f4_cone();             // plain v-v1 plus v1 -> v2, v -> v2
graphs::MixedGraph six_vertex_kernel_graph();
graphs::LabelledGraph labelled_path(int theta_x, int theta_y, int theta_z);
}  // namespace fixtures

}  // namespace graphlie::golden
