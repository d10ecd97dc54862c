#include "stcray/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

#include "stcray/errors.hpp"

namespace stcray {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};

void write_png_impl(const std::filesystem::path& path, int width, int height, int color_type,
                    const std::uint8_t* pixels, std::size_t row_bytes) {
    std::unique_ptr<std::FILE, FileCloser> fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) throw IoFailure("cannot open for writing: " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoFailure("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoFailure("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoFailure("png encode failed: " + path.string());
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_bytep> rows(static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y)
        rows[y] = const_cast<png_bytep>(pixels + static_cast<std::size_t>(y) * row_bytes);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace

void write_png(const std::filesystem::path& path, const RgbImage& img) {
    write_png_impl(path, img.width, img.height, PNG_COLOR_TYPE_RGB, img.pixels.data(),
                   static_cast<std::size_t>(img.width) * 3);
}

void write_png(const std::filesystem::path& path, const GrayImage& img) {
    write_png_impl(path, img.width, img.height, PNG_COLOR_TYPE_GRAY, img.pixels.data(),
                   static_cast<std::size_t>(img.width));
}

}  // namespace stcray
