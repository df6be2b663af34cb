#pragma once

#include <filesystem>
#include <string>

namespace promptforge {

/// Reference to one generated image. Handles with equal content hashes
/// compare equal regardless of where the bytes live.
struct ImageHandle {
    std::string content_hash;           // sha-256, 64 hex chars
    std::filesystem::path storage_ref;  // empty when the bytes are inline
    std::string inline_bytes;           // empty when backed by a store
    int width = 0;
    int height = 0;
    std::string source_prompt_id;
    int candidate_index = -1;

    friend bool operator==(const ImageHandle& a, const ImageHandle& b) {
        return a.content_hash == b.content_hash;
    }
};

/// Content-addressed image store with two-level hex-prefix sharding
/// (<root>/ab/cd/<hash>). Writes are idempotent: identical bytes land on
/// the same path.
class ImageStore {
public:
    explicit ImageStore(std::filesystem::path root);

    ImageHandle put(std::string_view bytes, int width, int height,
                    std::string source_prompt_id, int candidate_index);

    /// Bytes for a handle, from the inline payload or the store.
    std::string fetch(const ImageHandle& handle) const;

    std::filesystem::path path_for(std::string_view content_hash) const;
    const std::filesystem::path& root() const noexcept { return root_; }

private:
    std::filesystem::path root_;
};

} // namespace promptforge
