# full triangle
f a b c
