#include "cutcell/fields.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cutcell {

FieldState make_state(const MomentSet& ms, double time) {
  FieldState fs;
  fs.time = time;
  const size_t nc = ms.volume[0].size();
  for (int p = 0; p < 2; ++p) {
    fs.bulk[p].assign(nc, 0.0);
    fs.gamma[p].assign(nc, 0.0);
  }
  return fs;
}

void write_checkpoint(std::ostream& os, const FieldState& fs) {
  os.precision(17);
  os << "time," << fs.time << "\n";
  os << "cell,phase,slot,value\n";
  for (int p = 0; p < 2; ++p)
    for (size_t c = 0; c < fs.bulk[p].size(); ++c) {
      if (fs.bulk[p][c] != 0.0)
        os << c << ',' << p << ",bulk," << fs.bulk[p][c] << '\n';
      if (fs.gamma[p][c] != 0.0)
        os << c << ',' << p << ",gamma," << fs.gamma[p][c] << '\n';
    }
}

FieldState read_checkpoint(std::istream& is, const MomentSet& ms) {
  FieldState fs = make_state(ms);
  std::string line;
  if (!std::getline(is, line) || line.rfind("time,", 0) != 0)
    throw std::runtime_error("checkpoint: missing time header");
  fs.time = std::stod(line.substr(5));
  std::getline(is, line);  // column header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell, phase, slot, value;
    std::getline(ss, cell, ',');
    std::getline(ss, phase, ',');
    std::getline(ss, slot, ',');
    std::getline(ss, value, ',');
    const size_t c = std::stoul(cell);
    const int p = std::stoi(phase);
    if (p < 0 || p > 1 || c >= fs.bulk[0].size())
      throw std::runtime_error("checkpoint: entry out of range");
    (slot == "gamma" ? fs.gamma[p][c] : fs.bulk[p][c]) = std::stod(value);
  }
  return fs;
}

}  // namespace cutcell
