#include "punkt/unicode.hpp"
#include "punkt/error.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace punkt::uni {

namespace {

[[noreturn]] void decode_fail(std::size_t offset) {
    throw Error("decode_utf8",
                "invalid UTF-8 sequence at byte offset " + std::to_string(offset));
}

icu::UnicodeString to_icu(std::u32string_view text) {
    return icu::UnicodeString::fromUTF32(
        reinterpret_cast<const UChar32*>(text.data()),
        static_cast<int32_t>(text.size()));
}

std::u32string from_icu(const icu::UnicodeString& us) {
    std::u32string out(static_cast<std::size_t>(us.countChar32()), U'\0');
    UErrorCode status = U_ZERO_ERROR;
    us.toUTF32(reinterpret_cast<UChar32*>(out.data()),
               static_cast<int32_t>(out.size()), status);
    if (U_FAILURE(status))
        throw Error("unicode", std::string("UTF-32 conversion failed: ") + u_errorName(status));
    return out;
}

} // namespace

std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        std::size_t len;
        char32_t cp;
        char32_t min;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2; cp = b0 & 0x1F; min = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3; cp = b0 & 0x0F; min = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4; cp = b0 & 0x07; min = 0x10000;
        } else {
            decode_fail(i); // stray continuation byte or 0xFE/0xFF
        }
        if (i + len > n) decode_fail(i);
        for (std::size_t k = 1; k < len; ++k) {
            const unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk & 0xC0) != 0x80) decode_fail(i);
            cp = (cp << 6) | (bk & 0x3F);
        }
        if (cp < min) decode_fail(i);                      // overlong
        if (cp >= 0xD800 && cp <= 0xDFFF) decode_fail(i);  // surrogate
        if (cp > 0x10FFFF) decode_fail(i);
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::size_t utf8_length(std::u32string_view text) {
    std::size_t n = 0;
    for (char32_t cp : text)
        n += cp < 0x80 ? 1 : cp < 0x800 ? 2 : cp < 0x10000 ? 3 : 4;
    return n;
}

std::u32string compose_nfc(std::u32string_view text, std::size_t* replaced) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status))
        throw Error("normalize_text", std::string("NFC unavailable: ") + u_errorName(status));

    const icu::UnicodeString in = to_icu(text);
    icu::UnicodeString normalized = nfc->normalize(in, status);
    if (U_FAILURE(status))
        throw Error("normalize_text", std::string("NFC failed: ") + u_errorName(status));

    std::u32string out = from_icu(normalized);
    if (replaced) {
        if (out.size() < text.size()) {
            *replaced = text.size() - out.size();
        } else {
            std::size_t diff = 0;
            for (std::size_t i = 0; i < out.size(); ++i)
                if (i >= text.size() || out[i] != text[i]) ++diff;
            *replaced = diff;
        }
    }
    return out;
}

std::u32string case_fold(std::u32string_view text) {
    icu::UnicodeString us = to_icu(text);
    us.foldCase(U_FOLD_CASE_DEFAULT);
    return from_icu(us);
}

bool is_letter(char32_t c) {
    return u_isalpha(static_cast<UChar32>(c)) != 0;
}

bool is_digit(char32_t c) {
    return u_charType(static_cast<UChar32>(c)) == U_DECIMAL_DIGIT_NUMBER;
}

} // namespace punkt::uni
