// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fermisim {

SectorShape FcidumpData::sector() const {
  const int norb = hamiltonian.norb();
  if ((nelec + ms2) % 2 != 0 || nelec < 0) {
    throw std::invalid_argument("NELEC and MS2 must have the same parity");
  }
  SectorShape shape{norb, (nelec + ms2) / 2, (nelec - ms2) / 2};
  shape.validate();
  return shape;
}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

bool parse_int(std::string_view token, long& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Accepts Fortran 'D' exponents.
bool parse_real(std::string token, double& out) {
  std::replace(token.begin(), token.end(), 'D', 'E');
  std::replace(token.begin(), token.end(), 'd', 'e');
  const char* begin = token.data();
  if (!token.empty() && token[0] == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && ptr != begin;
}

struct Header {
  std::map<std::string, std::vector<std::string>> values;
  int end_line = 0;
};

// Splits the namelist body into KEY = v1, v2, ... groups.
void parse_namelist_body(const std::string& body, Header& header, int line) {
  std::vector<std::string> tokens;
  std::string cur;
  const auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (char ch : body) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      flush();
    } else if (ch == '=') {
      flush();
      tokens.emplace_back("=");
    } else {
      cur += ch;
    }
  }
  flush();
  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i + 1 < tokens.size() && tokens[i + 1] == "=") {
      key = upper(tokens[i]);
      header.values[key];
      ++i;
    } else if (tokens[i] == "=" || key.empty()) {
      throw ParseError(line, "malformed namelist near '" + tokens[i] + "'");
    } else {
      header.values[key].push_back(tokens[i]);
    }
  }
}

int header_int(const Header& header, const std::string& key, std::optional<int> fallback) {
  const auto it = header.values.find(key);
  if (it == header.values.end()) {
    if (fallback) return *fallback;
    throw ParseError(header.end_line, "header is missing " + key);
  }
  long value = 0;
  if (it->second.size() != 1 || !parse_int(it->second[0], value)) {
    throw ParseError(header.end_line, key + " must be a single integer");
  }
  return static_cast<int>(value);
}

}  // namespace

FcidumpData parse_fcidump(std::istream& in) {
  std::string line;
  int line_no = 0;
  Header header;
  std::string body;
  bool started = false;
  bool finished = false;
  while (!finished && std::getline(in, line)) {
    ++line_no;
    std::string text = line;
    if (!started) {
      const std::string up = upper(text);
      const auto pos = up.find("&FCI");
      if (pos == std::string::npos) {
        if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
          continue;
        }
        throw ParseError(line_no, "expected '&FCI' namelist header");
      }
      started = true;
      text = text.substr(pos + 4);
    }
    const std::string up = upper(text);
    std::size_t stop = up.find("&END");
    std::size_t skip = 4;
    if (stop == std::string::npos) {
      stop = up.find('/');
      skip = 1;
    }
    if (stop != std::string::npos) {
      finished = true;
      if (up.find_first_not_of(" \t\r", stop + skip) != std::string::npos) {
        throw ParseError(line_no, "unexpected text after the namelist terminator");
      }
      text = text.substr(0, stop);
    }
    parse_namelist_body(text, header, line_no);
  }
  if (!finished) throw ParseError(line_no, "namelist header is not terminated by &END or '/'");
  header.end_line = line_no;

  const int norb = header_int(header, "NORB", std::nullopt);
  if (norb < 0 || norb > kMaxOrbitals) throw ParseError(line_no, "NORB out of range");
  FcidumpData data;
  data.nelec = header_int(header, "NELEC", std::nullopt);
  data.ms2 = header_int(header, "MS2", 0);
  data.hamiltonian.one_body = Matrix::Zero(norb, norb);
  data.hamiltonian.two_body = TwoBodyTensor(norb);

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 5) {
      throw ParseError(line_no, "expected 'value i j k l', got " + std::to_string(tokens.size()) +
                                    " fields");
    }
    double value = 0.0;
    if (!parse_real(tokens[0], value)) {
      throw ParseError(line_no, "non-numeric integral value '" + tokens[0] + "'");
    }
    int idx[4];
    for (int k = 0; k < 4; ++k) {
      long v = 0;
      if (!parse_int(tokens[k + 1], v)) {
        throw ParseError(line_no, "non-integer index '" + tokens[k + 1] + "'");
      }
      if (v < 0 || v > norb) {
        throw ParseError(line_no, "index " + tokens[k + 1] + " outside 0.." + std::to_string(norb));
      }
      idx[k] = static_cast<int>(v);
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      data.hamiltonian.constant = value;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      data.hamiltonian.two_body.set_symmetric(i - 1, j - 1, k - 1, l - 1, value);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      data.hamiltonian.one_body(i - 1, j - 1) = value;
      data.hamiltonian.one_body(j - 1, i - 1) = value;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // Orbital energy; not part of the Hamiltonian.
    } else {
      throw ParseError(line_no, "invalid index combination");
    }
  }
  return data;
}

FcidumpData read_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_fcidump(in);
}

void write_fcidump(std::ostream& out, const FcidumpData& data) {
  const MolecularHamiltonian& ham = data.hamiltonian;
  const int n = ham.norb();
  if (ham.two_body.norb() != n) throw std::invalid_argument("two_body dimension mismatch");
  constexpr double kTol = 1e-12;
  if ((n > 0 && ham.one_body.imag().cwiseAbs().maxCoeff() > kTol) || ham.two_body.max_imag() > kTol) {
    throw std::invalid_argument("FCIDUMP requires real integrals");
  }
  if (n > 0 && (ham.one_body - ham.one_body.transpose()).cwiseAbs().maxCoeff() > kTol) {
    throw std::invalid_argument("FCIDUMP requires a symmetric one-body matrix");
  }
  if (ham.two_body.symmetry_error() > kTol) {
    throw std::invalid_argument("FCIDUMP requires 8-fold symmetric two-body integrals");
  }
  out << "&FCI NORB=" << n << ",NELEC=" << data.nelec << ",MS2=" << data.ms2 << ",\n ORBSYM=";
  for (int p = 0; p < n; ++p) out << "1,";
  out << "\n ISYM=1,\n&END\n";

  char buf[64];
  const auto record = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf << ' ' << i << ' ' << j << ' ' << k << ' ' << l << '\n';
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = ham.two_body(i, j, k, l).real();
          if (v != 0.0) record(v, i + 1, j + 1, k + 1, l + 1);
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = ham.one_body(i, j).real();
      if (v != 0.0) record(v, i + 1, j + 1, 0, 0);
    }
  record(ham.constant, 0, 0, 0, 0);
  if (!out) throw std::runtime_error("FCIDUMP write failed");
}

}  // namespace fermisim
