#include "blochwalk/output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>

#include <openssl/evp.h>

namespace blochwalk {
namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string fixed(double value, int digits) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", digits, value);
  return buf.data();
}

// Diverging blue-white-red; t in [-1, 1].
std::string diverging_color(double t) {
  static constexpr std::array<double, 3> kNegative{33.0, 102.0, 172.0};
  static constexpr std::array<double, 3> kPositive{178.0, 24.0, 43.0};
  t = std::clamp(t, -1.0, 1.0);
  const auto& end = t < 0.0 ? kNegative : kPositive;
  const double a = std::abs(t);
  std::array<char, 8> buf{};
  const auto channel = [&](int c) {
    return static_cast<int>(std::lround(255.0 + a * (end[static_cast<std::size_t>(c)] - 255.0)));
  };
  std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", channel(0), channel(1), channel(2));
  return buf.data();
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12e", value);
  return buf.data();
}

void write_wigner_csv(const WignerGrid& grid, const std::filesystem::path& path) {
  std::string text = "theta,phi,weight_theta,W\n";
  text.reserve(grid.theta.size() * grid.phi.size() * 80);
  for (std::size_t i = 0; i < grid.theta.size(); ++i) {
    const std::string prefix = format_number(grid.theta[i]);
    const std::string weight = format_number(grid.theta_weights[i]);
    for (std::size_t k = 0; k < grid.phi.size(); ++k) {
      text += prefix;
      text += ',';
      text += format_number(grid.phi[k]);
      text += ',';
      text += weight;
      text += ',';
      text += format_number(grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
      text += '\n';
    }
  }
  write_text(path, text);
}

void write_marginal_csv(const PhiDistribution& marginal, const std::filesystem::path& path) {
  const SiteIndexing& idx = marginal.sites.indexing();
  const double dphi = 2.0 * kPi / static_cast<double>(marginal.phi.size());
  std::string text = "phi,P,site_index,site_prob\n";
  for (std::size_t k = 0; k < marginal.phi.size(); ++k) {
    text += format_number(marginal.phi[k]);
    text += ',';
    text += format_number(marginal.density[k]);
    text += ',';
    const double s = marginal.phi[k] / idx.delta_phi();
    const long n = std::lround(s);
    if (std::abs(s - static_cast<double>(n)) * idx.delta_phi() < 1e-9 * dphi) {
      const int site = idx.wrap(static_cast<int>(n));
      text += std::to_string(site);
      text += ',';
      text += format_number(marginal.sites.at(site));
    } else {
      text += ',';
    }
    text += '\n';
  }
  write_text(path, text);
}

void write_sigma_csv(std::span<const SigmaRow> rows, const std::filesystem::path& path) {
  std::string text = "k,sigma_coherent,sigma_ideal\n";
  for (const auto& row : rows) {
    text += std::to_string(row.k);
    text += ',';
    text += format_number(row.sigma_coherent);
    text += ',';
    text += format_number(row.sigma_ideal);
    text += '\n';
  }
  write_text(path, text);
}

void write_sites_csv(const SiteDistribution& coherent, const SiteDistribution& ideal,
                     const std::filesystem::path& path) {
  std::string text = "site_index,phi,p_coherent,p_ideal\n";
  const SiteIndexing& idx = coherent.indexing();
  for (int n = idx.min_site(); n <= idx.max_site(); ++n) {
    text += std::to_string(n);
    text += ',';
    text += format_number(n * idx.delta_phi());
    text += ',';
    text += format_number(coherent.at(n));
    text += ',';
    text += format_number(ideal.at(n));
    text += '\n';
  }
  write_text(path, text);
}

void write_ideal_csv(std::span<const SiteDistribution> steps, const std::filesystem::path& path) {
  std::string text = "k,site_index,p_ideal\n";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const SiteIndexing& idx = steps[k].indexing();
    for (int n = idx.min_site(); n <= idx.max_site(); ++n) {
      text += std::to_string(k);
      text += ',';
      text += std::to_string(n);
      text += ',';
      text += format_number(steps[k].at(n));
      text += '\n';
    }
  }
  write_text(path, text);
}

void render_heatmap_svg(const WignerGrid& grid, const SiteIndexing& indexing,
                        const std::filesystem::path& path) {
  constexpr double kPlotWidth = 720.0;
  constexpr double kPlotHeight = 360.0;
  constexpr double kLeft = 60.0;
  constexpr double kTop = 30.0;
  const double total_width = kLeft + kPlotWidth + 30.0;
  const double total_height = kTop + kPlotHeight + 50.0;

  const double scale = grid.values.size() > 0 ? grid.values.cwiseAbs().maxCoeff() : 0.0;
  const std::size_t n_theta = grid.theta.size();
  const std::size_t n_phi = grid.phi.size();
  const double dphi = grid.phi_step();

  // Cell edges: theta halfway between nodes (clamped to [0, pi]); phi cells
  // are centred on the nodes.
  std::vector<double> theta_edges(n_theta + 1);
  theta_edges.front() = 0.0;
  theta_edges.back() = kPi;
  for (std::size_t i = 1; i < n_theta; ++i) {
    theta_edges[i] = 0.5 * (grid.theta[i - 1] + grid.theta[i]);
  }
  const auto x_of = [&](double phi) { return kLeft + (phi + kPi) / (2.0 * kPi) * kPlotWidth; };
  const auto y_of = [&](double theta) { return kTop + theta / kPi * kPlotHeight; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(total_width, 0) +
         "\" height=\"" + fixed(total_height, 0) + "\" data-scale-max=\"" + format_number(scale) +
         "\">\n";
  svg += "<title>Wigner function W(theta, phi)</title>\n";
  svg += "<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double y0 = y_of(theta_edges[i]);
    const double y1 = y_of(theta_edges[i + 1]);
    for (std::size_t k = 0; k < n_phi; ++k) {
      // The first phi cell straddles -pi; clip it to the plot.
      const double x0 = x_of(std::max(-kPi, grid.phi[k] - 0.5 * dphi));
      const double x1 = x_of(std::min(kPi, grid.phi[k] + 0.5 * dphi));
      const double w = grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
      const double t = scale > 0.0 ? w / scale : 0.0;
      svg += "<rect x=\"" + fixed(x0, 3) + "\" y=\"" + fixed(y0, 3) + "\" width=\"" +
             fixed(x1 - x0, 3) + "\" height=\"" + fixed(y1 - y0, 3) + "\" fill=\"" +
             diverging_color(t) + "\"/>\n";
    }
    if (n_phi > 0) {
      // Right-hand sliver of the periodic first column.
      const double x0 = x_of(kPi - 0.5 * dphi);
      const double w = grid.values(static_cast<Eigen::Index>(i), 0);
      svg += "<rect x=\"" + fixed(x0, 3) + "\" y=\"" + fixed(y0, 3) + "\" width=\"" +
             fixed(x_of(kPi) - x0, 3) + "\" height=\"" + fixed(y1 - y0, 3) + "\" fill=\"" +
             diverging_color(scale > 0.0 ? w / scale : 0.0) + "\"/>\n";
    }
  }
  svg += "</g>\n<g id=\"axes\" font-family=\"sans-serif\" font-size=\"11\" stroke=\"#000\">\n";
  svg += "<rect x=\"" + fixed(kLeft, 3) + "\" y=\"" + fixed(kTop, 3) + "\" width=\"" +
         fixed(kPlotWidth, 3) + "\" height=\"" + fixed(kPlotHeight, 3) + "\" fill=\"none\"/>\n";
  for (int n = indexing.min_site(); n <= indexing.max_site(); ++n) {
    const double x = x_of(n * indexing.delta_phi());
    const double y = kTop + kPlotHeight;
    svg += "<line class=\"phi-tick\" x1=\"" + fixed(x, 3) + "\" y1=\"" + fixed(y, 3) +
           "\" x2=\"" + fixed(x, 3) + "\" y2=\"" + fixed(y + 5.0, 3) + "\"/>\n";
    svg += "<text stroke=\"none\" text-anchor=\"middle\" x=\"" + fixed(x, 3) + "\" y=\"" +
           fixed(y + 17.0, 3) + "\">" + std::to_string(n) + "</text>\n";
  }
  const std::array<std::pair<double, const char*>, 3> theta_ticks{
      {{0.0, "0"}, {kPi / 2, "pi/2"}, {kPi, "pi"}}};
  for (const auto& [theta, label] : theta_ticks) {
    const double y = y_of(theta);
    svg += "<line x1=\"" + fixed(kLeft - 5.0, 3) + "\" y1=\"" + fixed(y, 3) + "\" x2=\"" +
           fixed(kLeft, 3) + "\" y2=\"" + fixed(y, 3) + "\"/>\n";
    svg += "<text stroke=\"none\" text-anchor=\"end\" x=\"" + fixed(kLeft - 8.0, 3) + "\" y=\"" +
           fixed(y + 4.0, 3) + "\">" + label + "</text>\n";
  }
  svg += "<text stroke=\"none\" text-anchor=\"middle\" x=\"" + fixed(kLeft + kPlotWidth / 2, 3) +
         "\" y=\"" + fixed(total_height - 8.0, 3) + "\">site n (phi = n * 2pi/" +
         std::to_string(indexing.sites()) + "), color scale +-" + format_number(scale) +
         "</text>\n";
  svg += "</g>\n</svg>\n";
  write_text(path, svg);
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for hashing");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw IoError("sha256: digest initialisation failed");
  }
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    const auto got = in.gcount();
    if (got > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(got));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

}  // namespace blochwalk
