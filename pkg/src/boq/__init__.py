"""Short-text classifier toolkit for Bill-of-Quantities item descriptions.

Maps free-text BoQ line items to ICMS category codes with two model
families: classical learners over bag-of-words features (Naive Bayes,
linear SVM, random forest) and neural models over learned word embeddings
(MLP, temporal convolutional network).
"""

__version__ = "0.1.0"
