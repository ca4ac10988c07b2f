#include "superlight/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace superlight {

Hash256 hash256(std::span<const uint8_t> data) {
    Hash256 out;
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.bytes.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != 32) {
        throw std::runtime_error("sha256 failed");
    }
    return out;
}

Hash256 hash256_tagged(uint8_t tag, std::span<const uint8_t> data) {
    Bytes buf;
    buf.reserve(data.size() + 1);
    buf.push_back(tag);
    buf.insert(buf.end(), data.begin(), data.end());
    return hash256(buf);
}

}  // namespace superlight
