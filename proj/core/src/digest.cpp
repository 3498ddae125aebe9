#include "lensspec/digest.hpp"

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

namespace lensspec {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4U]);
    out.push_back(kHex[md[i] & 0xFU]);
  }
  return out;
}

std::string table_digest(const CountTable& table) { return sha256_hex(table.to_json().dump()); }

std::string certificate_digest(const ThetaCertificate& cert) {
  nlohmann::json j = {{"q", cert.q}, {"m", cert.m}, {"coefficients", cert.coefficients}};
  return sha256_hex(j.dump());
}

}  // namespace lensspec
