#include <doctest.h>

#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "blochwalk/output.hpp"
#include "support/temp_dir.hpp"

using namespace blochwalk;

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

WignerGrid walked_grid(int two_j, int sites, int steps) {
  const SpinQuantum j(two_j);
  const SiteIndexing idx(sites);
  const auto states = evolve(CoinWalkerState::product(site_state(idx, j, 0), 1.0, 0.0),
                             CoinPulse::hadamard(), WalkSchedule::site_aligned(idx, steps));
  return wigner_grid(reduce_walker(states.back()), GridResolution::defaults(j, sites), kernel_weights(j));
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(format_number(1.0) == "1.000000000000e+00");
  CHECK(format_number(-0.000123) == "-1.230000000000e-04");
  CHECK(format_number(0.0) == "0.000000000000e+00");
}

TEST_CASE("write_wigner_csv") {
  const testing::TempDir dir;
  const WignerGrid g = walked_grid(10, 6, 2);
  write_wigner_csv(g, dir.path() / "w.csv");
  const auto lines = read_lines(dir.path() / "w.csv");
  REQUIRE(lines.size() == 1 + g.theta.size() * g.phi.size());
  CHECK(lines[0] == "theta,phi,weight_theta,W");
  const std::regex number(R"(-?\d\.\d{12}e[+-]\d{2,3})");
  for (const auto& cell : split(lines[1])) CHECK(std::regex_match(cell, number));
  const auto last = split(lines.back());
  CHECK(std::stod(last[0]) == doctest::Approx(g.theta.back()));
  CHECK(std::stod(last[3]) == doctest::Approx(g.values(g.values.rows() - 1, g.values.cols() - 1)).epsilon(1e-11));
  CHECK_THROWS_AS(write_wigner_csv(g, dir.path() / "missing" / "w.csv"), IoError);
}

TEST_CASE("write_marginal_csv re-integrates to one") {
  const testing::TempDir dir;
  const SiteIndexing idx(6);
  const PhiDistribution m = marginal_phi(walked_grid(20, 6, 2), idx);
  write_marginal_csv(m, dir.path() / "m.csv");
  const auto lines = read_lines(dir.path() / "m.csv");
  REQUIRE(lines.size() == 1 + m.phi.size());
  CHECK(lines[0] == "phi,P,site_index,site_prob");
  double integral = 0.0;
  double site_total = 0.0;
  std::set<int> labelled;
  const double dphi = 2 * kPi / static_cast<double>(m.phi.size());
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(lines[r]);
    REQUIRE(cells.size() == 4);
    integral += std::stod(cells[1]) * dphi;
    if (!cells[2].empty()) {
      labelled.insert(std::stoi(cells[2]));
      site_total += std::stod(cells[3]);
    } else {
      CHECK(cells[3].empty());
    }
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(site_total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(labelled == std::set<int>{-2, -1, 0, 1, 2, 3});
}

TEST_CASE("sigma, sites and ideal CSVs") {
  const testing::TempDir dir;
  const std::vector<SigmaRow> rows{{0, 0.1, 0.0}, {1, 0.2, 0.15}};
  write_sigma_csv(rows, dir.path() / "s.csv");
  auto lines = read_lines(dir.path() / "s.csv");
  CHECK(lines == std::vector<std::string>{"k,sigma_coherent,sigma_ideal",
                                          "0,1.000000000000e-01,0.000000000000e+00",
                                          "1,2.000000000000e-01,1.500000000000e-01"});

  const auto ideal = ideal_walk(6, 2, coin_unitary(CoinPulse::hadamard()));
  write_sites_csv(ideal[2], ideal[1], dir.path() / "sites.csv");
  lines = read_lines(dir.path() / "sites.csv");
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "site_index,phi,p_coherent,p_ideal");
  CHECK(split(lines[1])[0] == "-2");
  CHECK(split(lines[3])[2] == "5.000000000000e-01");

  write_ideal_csv(ideal, dir.path() / "ideal.csv");
  lines = read_lines(dir.path() / "ideal.csv");
  CHECK(lines.size() == 1 + 3 * 6);
  CHECK(lines[0] == "k,site_index,p_ideal");
}

TEST_CASE("render_heatmap_svg") {
  const testing::TempDir dir;
  const SiteIndexing idx(6);
  const SpinQuantum j(6);
  const WignerGrid flat = wigner_grid(DensityMatrix::maximally_mixed(j), GridResolution{8, 24}, kernel_weights(j));
  render_heatmap_svg(flat, idx, dir.path() / "flat.svg");
  std::ifstream in(dir.path() / "flat.svg");
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  const std::regex fill("<rect [^>]*fill=\"(#[0-9a-f]{6})\"");
  std::set<std::string> colours;
  std::size_t cells = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), fill); it != std::sregex_iterator(); ++it) {
    colours.insert((*it)[1]);
    ++cells;
  }
  CHECK(cells == 8 * (24 + 1));
  CHECK(colours.size() == 1);

  const std::regex scale("data-scale-max=\"([^\"]+)\"");
  std::smatch match;
  REQUIRE(std::regex_search(svg, match, scale));
  CHECK(std::stod(match[1]) == doctest::Approx(1.0 / 7.0).epsilon(1e-10));

  std::size_t ticks = 0;
  for (std::size_t pos = 0; (pos = svg.find("class=\"phi-tick\"", pos)) != std::string::npos; ++pos) ++ticks;
  CHECK(ticks == 6);

  const WignerGrid walked = walked_grid(20, 6, 2);
  render_heatmap_svg(walked, idx, dir.path() / "walk.svg");
  std::ifstream in2(dir.path() / "walk.svg");
  const std::string svg2((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  REQUIRE(std::regex_search(svg2, match, scale));
  CHECK(std::stod(match[1]) == doctest::Approx(walked.values.cwiseAbs().maxCoeff()).epsilon(1e-11));
}

TEST_CASE("sha256_file") {
  const testing::TempDir dir;
  {
    std::ofstream out(dir.path() / "abc.txt", std::ios::binary);
    out << "abc";
  }
  CHECK(sha256_file(dir.path() / "abc.txt") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK_THROWS_AS(sha256_file(dir.path() / "nope"), IoError);
}
