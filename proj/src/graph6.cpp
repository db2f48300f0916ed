#include "polaritylab/graph6.hpp"

namespace polaritylab {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

std::size_t body_length(int n) { return (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(kOffset + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kOffset + (acc << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::malformed_header, "empty input");
  const int header = static_cast<unsigned char>(text[0]);
  if (text[0] == ':' || text[0] == ';' || text[0] == '&')
    throw Error(ErrorCode::malformed_header, "sparse6/digraph6 input is not supported");
  if (header < kOffset || header > kMaxByte)
    throw Error(ErrorCode::malformed_header, "header byte out of range");
  if (header == kMaxByte)
    throw Error(ErrorCode::malformed_header, "multi-byte order header (n > 62) not supported");
  const int n = header - kOffset;
  if (n > Graph::kMaxOrder)
    throw Error(ErrorCode::cap_exceeded, "order " + std::to_string(n) + " exceeds vertex cap");

  const std::size_t need = body_length(n);
  const std::string_view body = text.substr(1);
  if (body.size() < need) throw Error(ErrorCode::truncated_body, "expected " + std::to_string(need) + " body bytes");
  if (body.size() > need) throw Error(ErrorCode::trailing_garbage, "unexpected bytes after body");

  Graph g(n);
  std::size_t pos = 0;
  int bit = 6;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit == 6) {
        value = static_cast<unsigned char>(body[pos++]) - kOffset;
        if (value < 0 || value > kMaxByte - kOffset)
          throw Error(ErrorCode::truncated_body, "body byte out of range at offset " + std::to_string(pos));
        bit = 0;
      }
      if ((value >> (5 - bit)) & 1) g.add_edge(i, j);
      ++bit;
    }
  }
  if (bit < 6 && (value & ((1 << (6 - bit)) - 1)) != 0)
    throw Error(ErrorCode::trailing_garbage, "nonzero padding bits");
  return g;
}

}  // namespace polaritylab
