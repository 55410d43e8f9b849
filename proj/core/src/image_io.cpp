#include "qiedge/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace qiedge {

namespace {

AnyImage load_png(const std::string& path) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.c_str()))
        throw IoError("PNG read failed: " + path + ": " + image.message);

    const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
    image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        png_image_free(&image);
        throw IoError("PNG decode failed: " + path + ": " + image.message);
    }

    const int w = static_cast<int>(image.width), h = static_cast<int>(image.height);
    if (w < 1 || h < 1) throw IoError("PNG has zero dimensions: " + path);
    if (color) {
        RgbImage out(w, h);
        for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = buffer[i];
        return out;
    }
    GrayImage out(w, h);
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = buffer[i];
    return out;
}

AnyImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::string magic;
    in >> magic;
    if (magic != "P5") throw IoError("unsupported PGM variant (want P5): " + path);

    auto next_token = [&in, &path]() -> long {
        // skip whitespace and '#' comment lines
        while (true) {
            int c = in.peek();
            if (c == '#') {
                std::string line;
                std::getline(in, line);
            } else if (std::isspace(c)) {
                in.get();
            } else {
                break;
            }
        }
        long v = -1;
        if (!(in >> v)) throw IoError("malformed PGM header: " + path);
        return v;
    };

    const long w = next_token(), h = next_token(), maxval = next_token();
    if (w < 1 || h < 1 || maxval < 1 || maxval > 255)
        throw IoError("unsupported PGM header: " + path);
    in.get();  // single whitespace before raster
    std::vector<std::uint8_t> buffer(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(buffer.data()), static_cast<std::streamsize>(buffer.size()));
    if (in.gcount() != static_cast<std::streamsize>(buffer.size()))
        throw IoError("truncated PGM raster: " + path);

    GrayImage out(static_cast<int>(w), static_cast<int>(h));
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = buffer[i];
    return out;
}

}  // namespace

AnyImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    char magic[2] = {0, 0};
    in.read(magic, 2);
    in.close();
    if (magic[0] == 'P' && magic[1] == '5') return load_pgm(path);
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') return load_png(path);
    throw IoError("unrecognized image format: " + path);
}

GrayImage to_gray(const AnyImage& img) {
    if (const auto* g = std::get_if<GrayImage>(&img)) return *g;
    return to_grayscale(std::get<RgbImage>(img));
}

RgbImage to_rgb(const AnyImage& img) {
    if (const auto* c = std::get_if<RgbImage>(&img)) return *c;
    const GrayImage& g = std::get<GrayImage>(img);
    RgbImage out(g.width, g.height);
    for (std::size_t i = 0; i < g.data.size(); ++i) {
        out.data[i * 3 + 0] = g.data[i];
        out.data[i * 3 + 1] = g.data[i];
        out.data[i * 3 + 2] = g.data[i];
    }
    return out;
}

std::uint8_t quantize_intensity(double v) {
    const double r = std::floor(v + 0.5);
    if (r < 0.0) return 0;
    if (r > 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

namespace {

void write_png(const std::string& path, int width, int height, bool color,
               const std::vector<std::uint8_t>& buffer) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(width);
    image.height = static_cast<png_uint_32>(height);
    image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&image, path.c_str(), 0, buffer.data(), 0, nullptr))
        throw IoError("PNG write failed: " + path + ": " + image.message);
}

}  // namespace

void save_png(const std::string& path, const GrayImage& img) {
    std::vector<std::uint8_t> buffer(img.data.size());
    for (std::size_t i = 0; i < buffer.size(); ++i) buffer[i] = quantize_intensity(img.data[i]);
    write_png(path, img.width, img.height, false, buffer);
}

void save_png(const std::string& path, const RgbImage& img) {
    std::vector<std::uint8_t> buffer(img.data.size());
    for (std::size_t i = 0; i < buffer.size(); ++i) buffer[i] = quantize_intensity(img.data[i]);
    write_png(path, img.width, img.height, true, buffer);
}

void save_pgm(const std::string& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for write: " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    for (double v : img.data) out.put(static_cast<char>(quantize_intensity(v)));
    if (!out) throw IoError("PGM write failed: " + path);
}

}  // namespace qiedge
