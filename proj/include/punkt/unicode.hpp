// Unicode helpers: strict UTF-8 decoding with exact error offsets, UTF-8
// encoding, canonical composition (NFC), full case folding and character
// classification. Normalization, folding and classification are backed by
// ICU; this header keeps ICU out of the rest of the codebase.

#ifndef PUNKT_UNICODE_HPP
#define PUNKT_UNICODE_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace punkt::uni {

// Decodes strict UTF-8 (rejects overlongs, surrogates, values > U+10FFFF,
// truncated sequences). Throws punkt::Error naming the byte offset of the
// first invalid sequence.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);

// Number of bytes encode_utf8(text) would produce.
std::size_t utf8_length(std::u32string_view text);

// Canonical composition. replaced, when non-null, receives the number of
// scalar values changed by the transform: the length reduction when scalars
// were merged, or the positional difference count for length-preserving
// canonical substitutions.
std::u32string compose_nfc(std::u32string_view text, std::size_t* replaced = nullptr);

// Full case folding (Unicode case folding, so U+00DF folds to "ss").
std::u32string case_fold(std::u32string_view text);

bool is_letter(char32_t c); // general category L*
bool is_digit(char32_t c);  // general category Nd

} // namespace punkt::uni

#endif
