#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blochwalk/wigner.hpp"

namespace blochwalk {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "%.12e"; every number in every CSV goes through here.
std::string format_number(double value);

/// theta,phi,weight_theta,W; one row per grid point, theta-major.
void write_wigner_csv(const WignerGrid& grid, const std::filesystem::path& path);

/// phi,P,site_index,site_prob; site columns are filled on rows whose phi is a
/// site centre and left empty otherwise.
void write_marginal_csv(const PhiDistribution& marginal, const std::filesystem::path& path);

struct SigmaRow {
  int k;
  double sigma_coherent;
  double sigma_ideal;
};

/// k,sigma_coherent,sigma_ideal
void write_sigma_csv(std::span<const SigmaRow> rows, const std::filesystem::path& path);

/// site_index,phi,p_coherent,p_ideal
void write_sites_csv(const SiteDistribution& coherent, const SiteDistribution& ideal,
                     const std::filesystem::path& path);

/// k,site_index,p_ideal for every step.
void write_ideal_csv(std::span<const SiteDistribution> steps, const std::filesystem::path& path);

/// Equirectangular theta-phi heatmap. Diverging blue-white-red scale
/// symmetric about W = 0 with bounds +-max|W|; phi ticks at the site angles.
void render_heatmap_svg(const WignerGrid& grid, const SiteIndexing& indexing,
                        const std::filesystem::path& path);

/// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace blochwalk
