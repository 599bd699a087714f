// Builds a few arrangements in code and prints their classification.
#include <iostream>

#include "linefree/linefree.hpp"

using namespace linefree;

namespace {

Arrangement from_integers(std::initializer_list<std::array<long, 3>> normals) {
  std::vector<ProjectiveLine> lines;
  for (const auto& n : normals) lines.emplace_back(Number(n[0]), Number(n[1]), Number(n[2]));
  return Arrangement(FieldSpec::rationals(), std::move(lines));
}

void report(const char* name, const Arrangement& arr) {
  Classification c = classify(arr);
  std::cout << name << ": t=" << t_vector(arr).to_string() << " mu=" << c.mu << " mdr=" << *c.mdr << " -> "
            << c.verdict_string() << "\n";
}

}  // namespace

int main() {
  report("triangle", from_integers({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  report("four general lines", from_integers({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  // The braid arrangement plus one line through two of its triple points.
  report("non-Fano", from_integers({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -1}}));

  // Over Q(sqrt(3)): three lines through the origin at 60 degrees, plus the line at infinity.
  Number s = Number::sqrt_of(3);
  Arrangement hex(FieldSpec::quadratic(3), {ProjectiveLine(0, 1, 0), ProjectiveLine(s, -1, 0),
                                            ProjectiveLine(s, 1, 0), ProjectiveLine(0, 0, 1)});
  report("three slopes over Q(sqrt(3))", hex);

  // Screening needs only the combinatorics.
  for (const auto& e : embedded_table().entries) {
    if (screen(e.profile())) std::cout << e.name << " passes the screen\n";
  }
}
