#pragma once

#include "flatkit/generators.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flatkit::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses any of the four instance formats (.mtx linear, .gg gain, .inc
// incidence, .rk construction script), dispatching on the first non-comment
// token. `name` seeds the instance metadata.
Instance parse_instance(const std::string& text, const std::string& name);
Instance load_instance(const std::string& path);

// Serializes linear, gain, incidence and uniform instances to their file
// formats; composite matroids are represented by construction scripts and
// cannot be serialized directly.
std::string serialize(const Instance& inst);

// File payloads for the gen subcommands.
std::string gen_dowling_file(int r, int t, bool delete_joints);
std::string gen_uniform_file(int r, int n);
std::string gen_k4_file();
std::string gen_random_file(int r, int n, std::uint64_t seed);
std::string gen_figure1_script(int a);
std::string gen_direct_sum_script(int left, int right);
std::string gen_two_sum_script(int left, int right);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace flatkit::io
