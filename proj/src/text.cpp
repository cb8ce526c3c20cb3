#include "commlab/text.hpp"

#include <cctype>
#include <limits>

namespace commlab {

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      Element element() {
        skip();
        std::size_t start = pos_;
        char        ch    = peek();
        switch (ch) {
          case 'a':
          case 'b': {
            ++pos_;
            expect('(');
            unsigned i = number();
            expect(',');
            unsigned j = number();
            expect(')');
            return guarded(start, [&] {
              return ch == 'a' ? Element::a(i, j) : Element::b(i, j);
            });
          }
          case 'd': {
            ++pos_;
            expect('(');
            unsigned k = number();
            expect(')');
            return guarded(start, [&] { return Element::d(k); });
          }
          case 'c':
            ++pos_;
            return Element::c();
          case 't': {
            ++pos_;
            expect('(');
            expect('[');
            std::vector<Element> args{element()};
            while (accept(',')) {
              args.push_back(element());
            }
            expect(']');
            expect(',');
            unsigned tag = number();
            expect(')');
            return guarded(start, [&] {
              return Element::tagged(std::move(args), tag);
            });
          }
          default:
            fail("expected an element");
        }
      }

      Term term() {
        skip();
        std::size_t start = pos_;
        if (peek() == 'x') {
          ++pos_;
          return Term::var(number());
        }
        if (text_.substr(pos_, 4) == "upqr") {
          pos_ += 4;
          expect('{');
          Element p = element();
          expect(';');
          Element q = element();
          expect(';');
          Element r = element();
          expect('}');
          expect('(');
          Term arg = term();
          expect(')');
          return guarded(start, [&] {
            return Term::upqr(Triple{p, q, r}, std::move(arg));
          });
        }
        if (peek() == 'u') {
          ++pos_;
          expect('(');
          Term arg = term();
          expect(')');
          return Term::u(std::move(arg));
        }
        if (peek() == 'f') {
          ++pos_;
          expect('(');
          std::vector<Term> args{term()};
          while (accept(',')) {
            args.push_back(term());
          }
          expect(')');
          return Term::f(std::move(args));
        }
        return Term::constant(element());
      }

      void finish() {
        skip();
        if (pos_ != text_.size()) {
          fail("unexpected trailing input");
        }
      }

     private:
      template <typename F>
      auto guarded(std::size_t start, F&& make) -> decltype(make()) {
        try {
          return make();
        } catch (DomainError const& e) {
          throw ParseError(e.what(), start);
        } catch (SignatureError const& e) {
          throw ParseError(e.what(), start);
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, pos_);
      }

      void skip() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      bool accept(char ch) {
        skip();
        if (peek() == ch) {
          ++pos_;
          return true;
        }
        return false;
      }

      void expect(char ch) {
        if (!accept(ch)) {
          fail(std::string("expected '") + ch + "'");
        }
      }

      unsigned number() {
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected a number");
        }
        unsigned long long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          value = value * 10 + static_cast<unsigned>(peek() - '0');
          if (value > std::numeric_limits<unsigned>::max()) {
            fail("number out of range");
          }
          ++pos_;
        }
        return static_cast<unsigned>(value);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  Element parse_element(std::string_view text) {
    Parser  p(text);
    Element e = p.element();
    p.finish();
    return e;
  }

  Term parse_term(std::string_view text) {
    Parser p(text);
    Term   t = p.term();
    p.finish();
    return t;
  }

}  // namespace commlab
