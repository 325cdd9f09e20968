#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace aalpha {

// Minimal JSON value with insertion-ordered objects. Doubles print with 12
// significant digits so repeated runs emit byte-identical reports.
class Json {
public:
    Json() : kind_(Kind::Null) {}
    Json(bool b) : kind_(Kind::Bool), bool_(b) {}
    Json(double v) : kind_(Kind::Double), num_(v) {}
    Json(int v) : kind_(Kind::Int), int_(v) {}
    Json(long v) : kind_(Kind::Int), int_(v) {}
    Json(long long v) : kind_(Kind::Int), int_(v) {}
    Json(std::uint64_t v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
    Json(const char* s) : kind_(Kind::String), str_(s) {}
    Json(std::string s) : kind_(Kind::String), str_(std::move(s)) {}

    static Json object();
    static Json array();

    Json& set(const std::string& key, Json value);  // object only
    Json& push(Json value);                         // array only

    std::string dump() const;

    static std::string formatDouble(double v);

private:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };

    void write(std::string& out) const;

    Kind kind_;
    bool bool_ = false;
    double num_ = 0.0;
    long long int_ = 0;
    std::string str_;
    std::vector<Json> items_;
    std::vector<std::pair<std::string, Json>> fields_;
};

}  // namespace aalpha
