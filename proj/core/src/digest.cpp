#include "judgecal/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace judgecal {

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> buf{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), buf.data(), &len, EVP_sha256(),
                   nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[buf[i] >> 4]);
        out.push_back(hex[buf[i] & 0x0f]);
    }
    return out;
}

std::string request_key(std::string_view kind, std::string_view model_id,
                        const nlohmann::json& request) {
    std::string material;
    material.append(kind);
    material.push_back('\n');
    material.append(model_id);
    material.push_back('\n');
    material.append(request.dump());
    return sha256_hex(material);
}

}  // namespace judgecal
