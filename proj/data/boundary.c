# boundary of a triangle
f a b
f b c
f a c
