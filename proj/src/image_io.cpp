#include "tactile/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

#include "tactile/errors.hpp"

namespace tactile {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open '" + path + "'");
    return f;
}

bool has_png_signature(std::FILE* f) {
    unsigned char sig[8];
    const size_t n = std::fread(sig, 1, 8, f);
    std::rewind(f);
    return n == 8 && png_sig_cmp(sig, 0, 8) == 0;
}

// ---------------------------------------------------------------------------
// PNG
// ---------------------------------------------------------------------------

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngReader() {
        png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
        if (!png || !info) {
            png_destroy_read_struct(&png, &info, nullptr);
            throw IoError("libpng initialization failed");
        }
    }
    ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngWriter() {
        png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
        if (!png || !info) {
            png_destroy_write_struct(&png, &info);
            throw IoError("libpng initialization failed");
        }
    }
    ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

ColorImage read_png_color(std::FILE* f, const std::string& path) {
    PngReader r;
    if (setjmp(png_jmpbuf(r.png))) throw IoError("PNG decode failed for '" + path + "'");
    png_init_io(r.png, f);
    png_read_info(r.png, r.info);

    const int bit_depth = png_get_bit_depth(r.png, r.info);
    if (bit_depth > 8)
        throw IoError("'" + path + "': bit depth " + std::to_string(bit_depth) +
                      " not supported for color input (8-bit RGB/RGBA required)");

    // Normalize every supported layout to 8-bit RGBA.
    png_set_expand(r.png);
    if (png_get_color_type(r.png, r.info) == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(r.png);
    png_set_gray_to_rgb(r.png);
    png_set_add_alpha(r.png, 0xFF, PNG_FILLER_AFTER);
    png_read_update_info(r.png, r.info);

    const int w = static_cast<int>(png_get_image_width(r.png, r.info));
    const int h = static_cast<int>(png_get_image_height(r.png, r.info));
    std::vector<uint8_t> row(static_cast<size_t>(w) * 4);

    ColorImage img(w, h);
    for (int y = 0; y < h; ++y) {
        png_read_row(r.png, row.data(), nullptr);
        float* dst = img.at(0, y);
        for (int x = 0; x < w; ++x) {
            const float a = row[x * 4 + 3] / 255.0f;
            for (int c = 0; c < 3; ++c) {
                const float v = row[x * 4 + c] / 255.0f;
                dst[x * 3 + c] = a * v + (1.0f - a);  // composite onto white
            }
        }
    }
    png_read_end(r.png, nullptr);
    return img;
}

GrayImage read_png_gray16(std::FILE* f, const std::string& path) {
    PngReader r;
    if (setjmp(png_jmpbuf(r.png))) throw IoError("PNG decode failed for '" + path + "'");
    png_init_io(r.png, f);
    png_read_info(r.png, r.info);

    const int bit_depth = png_get_bit_depth(r.png, r.info);
    const int color_type = png_get_color_type(r.png, r.info);
    if (bit_depth != 16 || color_type != PNG_COLOR_TYPE_GRAY)
        throw IoError("'" + path + "': expected a 16-bit grayscale PNG, got bit depth " +
                      std::to_string(bit_depth));
    png_read_update_info(r.png, r.info);

    const int w = static_cast<int>(png_get_image_width(r.png, r.info));
    const int h = static_cast<int>(png_get_image_height(r.png, r.info));
    std::vector<uint8_t> row(static_cast<size_t>(w) * 2);

    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        png_read_row(r.png, row.data(), nullptr);
        for (int x = 0; x < w; ++x) {
            const unsigned v = (static_cast<unsigned>(row[x * 2]) << 8) | row[x * 2 + 1];
            img.at(x, y) = static_cast<float>(v / 65535.0);
        }
    }
    png_read_end(r.png, nullptr);
    return img;
}

// ---------------------------------------------------------------------------
// PNM
// ---------------------------------------------------------------------------

int pnm_next_value(std::istream& in, const std::string& path) {
    // Skips whitespace and '#' comments between header tokens.
    while (true) {
        const int c = in.peek();
        if (c == EOF) throw IoError("'" + path + "': truncated PNM header");
        if (c == '#') {
            std::string skip;
            std::getline(in, skip);
            continue;
        }
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        break;
    }
    int value = 0;
    if (!(in >> value) || value < 0) throw IoError("'" + path + "': malformed PNM header");
    return value;
}

struct PnmHeader {
    char magic;  // '5' or '6'
    int width, height, maxval;
};

PnmHeader read_pnm_header(std::istream& in, const std::string& path) {
    char p = 0, m = 0;
    in.get(p);
    in.get(m);
    if (p != 'P' || (m != '5' && m != '6'))
        throw IoError("'" + path + "': not a binary PGM/PPM (P5/P6) file");
    PnmHeader h;
    h.magic = m;
    h.width = pnm_next_value(in, path);
    h.height = pnm_next_value(in, path);
    h.maxval = pnm_next_value(in, path);
    in.get();  // single whitespace before raster data
    if (h.width < 1 || h.height < 1) throw IoError("'" + path + "': invalid PNM dimensions");
    return h;
}

void read_exact(std::istream& in, char* buf, size_t n, const std::string& path) {
    in.read(buf, static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in.gcount()) != n) throw IoError("'" + path + "': truncated PNM pixel data");
}

ColorImage read_ppm(std::istream& in, const std::string& path) {
    const PnmHeader h = read_pnm_header(in, path);
    if (h.magic != '6') throw IoError("'" + path + "': expected a color PPM (P6)");
    if (h.maxval != 255)
        throw IoError("'" + path + "': PPM maxval " + std::to_string(h.maxval) + " not supported (255 required)");

    ColorImage img(h.width, h.height);
    std::vector<char> row(static_cast<size_t>(h.width) * 3);
    for (int y = 0; y < h.height; ++y) {
        read_exact(in, row.data(), row.size(), path);
        float* dst = img.at(0, y);
        for (size_t i = 0; i < row.size(); ++i) dst[i] = static_cast<uint8_t>(row[i]) / 255.0f;
    }
    return img;
}

GrayImage read_pgm(std::istream& in, const std::string& path) {
    const PnmHeader h = read_pnm_header(in, path);
    if (h.magic != '5') throw IoError("'" + path + "': expected a grayscale PGM (P5)");
    if (h.maxval != 255 && h.maxval != 65535)
        throw IoError("'" + path + "': PGM maxval " + std::to_string(h.maxval) + " not supported");

    GrayImage img(h.width, h.height);
    const int bytes = h.maxval > 255 ? 2 : 1;
    std::vector<char> row(static_cast<size_t>(h.width) * bytes);
    for (int y = 0; y < h.height; ++y) {
        read_exact(in, row.data(), row.size(), path);
        for (int x = 0; x < h.width; ++x) {
            unsigned v;
            if (bytes == 2)
                v = (static_cast<unsigned>(static_cast<uint8_t>(row[x * 2])) << 8) |
                    static_cast<uint8_t>(row[x * 2 + 1]);
            else
                v = static_cast<uint8_t>(row[x]);
            img.at(x, y) = static_cast<float>(v / static_cast<double>(h.maxval));
        }
    }
    return img;
}

bool is_png_path(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw IoError("cannot open '" + path + "'");
    unsigned char sig[8] = {};
    probe.read(reinterpret_cast<char*>(sig), 8);
    return probe.gcount() == 8 && png_sig_cmp(sig, 0, 8) == 0;
}

}  // namespace

ColorImage load_color_image(const std::string& path) {
    FilePtr f = open_file(path, "rb");
    if (has_png_signature(f.get())) return read_png_color(f.get(), path);
    f.reset();

    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_ppm(in, path);
}

void save_gray_image(const GrayImage& img, const std::string& path, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16)
        throw ValidationError("save_gray_image: bit depth must be 8 or 16, got " + std::to_string(bit_depth));

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    const int maxval = bit_depth == 16 ? 65535 : 255;
    out << "P5\n" << img.width << " " << img.height << "\n" << maxval << "\n";
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const long v = std::lround(static_cast<double>(img.at(x, y)) * maxval);
            const unsigned u = static_cast<unsigned>(v < 0 ? 0 : (v > maxval ? maxval : v));
            if (bit_depth == 16) {
                out.put(static_cast<char>(u >> 8));
                out.put(static_cast<char>(u & 0xFF));
            } else {
                out.put(static_cast<char>(u));
            }
        }
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

GrayImage load_gray_image_16(const std::string& path) {
    if (is_png_path(path)) {
        FilePtr f = open_file(path, "rb");
        return read_png_gray16(f.get(), path);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_pgm(in, path);
}

GrayImage load_gray_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_pgm(in, path);
}

void save_binary_png(const BinaryImage& img, const std::string& path, int dpi) {
    FilePtr f = open_file(path, "wb");
    PngWriter w;
    if (setjmp(png_jmpbuf(w.png))) throw IoError("PNG encode failed for '" + path + "'");
    png_init_io(w.png, f.get());
    png_set_IHDR(w.png, w.info, img.width, img.height, 1, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    if (dpi > 0) {
        const png_uint_32 per_meter = static_cast<png_uint_32>(std::lround(dpi / 0.0254));
        png_set_pHYs(w.png, w.info, per_meter, per_meter, PNG_RESOLUTION_METER);
    }
    png_write_info(w.png, w.info);

    const size_t row_bytes = (static_cast<size_t>(img.width) + 7) / 8;
    std::vector<uint8_t> row(row_bytes);
    for (int y = 0; y < img.height; ++y) {
        std::memset(row.data(), 0xFF, row_bytes);  // white ground
        for (int x = 0; x < img.width; ++x)
            if (img.at(x, y)) row[x >> 3] &= static_cast<uint8_t>(~(0x80 >> (x & 7)));  // ink = black
        png_write_row(w.png, row.data());
    }
    png_write_end(w.png, nullptr);
}

void save_binary_pgm(const BinaryImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    for (size_t i = 0; i < img.mask.size(); ++i) out.put(img.mask[i] ? '\0' : static_cast<char>(0xFF));
    if (!out) throw IoError("write failed for '" + path + "'");
}

BinaryImage load_binary_image(const std::string& path) {
    GrayImage gray;
    if (is_png_path(path)) {
        const ColorImage c = load_color_image(path);
        gray = GrayImage(c.width, c.height);
        for (int y = 0; y < c.height; ++y)
            for (int x = 0; x < c.width; ++x) gray.at(x, y) = c.at(x, y)[0];
    } else {
        gray = load_gray_pgm(path);
    }
    BinaryImage img(gray.width, gray.height);
    for (size_t i = 0; i < gray.values.size(); ++i) img.mask[i] = gray.values[i] < 0.5f;
    return img;
}

void save_indexed_png(int width, int height, const std::vector<uint8_t>& indices,
                      const std::vector<std::array<uint8_t, 3>>& palette, const std::string& path) {
    if (indices.size() != static_cast<size_t>(width) * height)
        throw ValidationError("save_indexed_png: index count does not match dimensions");

    FilePtr f = open_file(path, "wb");
    PngWriter w;
    if (setjmp(png_jmpbuf(w.png))) throw IoError("PNG encode failed for '" + path + "'");
    png_init_io(w.png, f.get());
    png_set_IHDR(w.png, w.info, width, height, 8, PNG_COLOR_TYPE_PALETTE, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);

    std::vector<png_color> colors(palette.size());
    for (size_t i = 0; i < palette.size(); ++i)
        colors[i] = {palette[i][0], palette[i][1], palette[i][2]};
    png_set_PLTE(w.png, w.info, colors.data(), static_cast<int>(colors.size()));
    png_write_info(w.png, w.info);

    for (int y = 0; y < height; ++y)
        png_write_row(w.png, const_cast<png_bytep>(indices.data() + static_cast<size_t>(y) * width));
    png_write_end(w.png, nullptr);
}

}  // namespace tactile
