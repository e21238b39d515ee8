#include "core/descriptor.hpp"

#include <stdexcept>

namespace qwtrap {

namespace {

std::uint32_t parse_ket_bits(const std::string& bits, int n) {
  if (static_cast<int>(bits.size()) != n) {
    throw std::invalid_argument("ket pattern '" + bits + "' must list all " +
                                std::to_string(n) + " emitters");
  }
  std::uint32_t mask = 0;
  for (int m = 0; m < n; ++m) {
    if (bits[m] == '1') {
      mask |= 1u << m;  // leftmost symbol is emitter 0
    } else if (bits[m] != '0') {
      throw std::invalid_argument("ket pattern must contain only 0 and 1");
    }
  }
  return mask;
}

}  // namespace

std::variant<PureState, DensityMatrix> parse_state(const std::string& text,
                                                   int n) {
  if (text == "w1") return w1_state(n);
  if (text == "w2") return w2_state(n);
  if (text == "phi") return phi_state(n);
  if (text == "vacuum") return vacuum_state(n);
  if (text == "mixed") return maximally_mixed(n);
  if (text.rfind("singlet:", 0) == 0) {
    const std::string args = text.substr(8);
    const auto comma = args.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("singlet descriptor needs two indices, e.g. singlet:0,1");
    }
    const int i = std::stoi(args.substr(0, comma));
    const int j = std::stoi(args.substr(comma + 1));
    return singlet_state(n, i, j);
  }
  if (text.rfind("ket:", 0) == 0) {
    return computational_state(n, parse_ket_bits(text.substr(4), n));
  }
  throw std::invalid_argument("unknown state descriptor '" + text + "'");
}

PureState parse_pure_state(const std::string& text, int n) {
  auto state = parse_state(text, n);
  if (std::holds_alternative<DensityMatrix>(state)) {
    throw std::invalid_argument("descriptor '" + text + "' denotes a mixed state");
  }
  return std::get<PureState>(std::move(state));
}

DensityMatrix as_density(const std::variant<PureState, DensityMatrix>& state) {
  if (std::holds_alternative<DensityMatrix>(state)) {
    return std::get<DensityMatrix>(state);
  }
  return pure_density(std::get<PureState>(state));
}

}  // namespace qwtrap
