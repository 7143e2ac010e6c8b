#pragma once

// Content-addressed result store for CLI requests: one JSON file per
// request, keyed by a hash of the canonical request text.  Entries record
// the request alongside the result, so a key collision or a corrupt file
// is detected and recomputed.  Writes are write-temp-then-rename.

#include <optional>
#include <string>

namespace liecoh {

struct CachedResult {
    std::string output;
    int exit_code = 0;
};

class ResultCache {
  public:
    explicit ResultCache(std::string dir);

    // Returns the stored result when a valid entry for this request
    // exists.  Warns on stderr and returns nothing when an entry is
    // corrupt or collides.
    std::optional<CachedResult> lookup(const std::string& canonical_request) const;

    void store(const std::string& canonical_request, const CachedResult& result) const;

    const std::string& dir() const { return dir_; }

  private:
    std::string path_for(const std::string& canonical_request) const;
    std::string dir_;
};

} // namespace liecoh
