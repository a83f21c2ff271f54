#pragma once

#include <iosfwd>
#include <string>

#include "bw/channel_sim.hpp"
#include "bw/constellation.hpp"
#include "bw/lattice.hpp"
#include "bw/types.hpp"

namespace bw {
namespace io {

// Whitespace-separated numbers, one vector per line; blank lines and lines
// starting with '#' are skipped. All rows must share one length.
std::vector<RealVec> read_real_vectors(std::istream& in);
std::vector<IntVec> read_int_vectors(std::istream& in);

// Comma-separated integer symbols, one message per line.
std::vector<IntVec> read_symbol_lines(std::istream& in);

std::string params_to_json(const LatticeParams& p);

std::string sim_config_to_json(const SimConfig& cfg);
SimConfig sim_config_from_json(const std::string& text);

// CSV emission; headers are part of the interface.
//   campaign: vnr_db,trials,point_errors,per,nep,ci_low,ci_high,mean_ops
//   ser:      same plus incomplete_rate (point_errors/per/nep hold symbol counts/rates)
std::string campaign_to_csv(const SimResult& r);
std::string ser_to_csv(const SerResult& r);

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
Csv read_csv(std::istream& in);

}  // namespace io
}  // namespace bw
