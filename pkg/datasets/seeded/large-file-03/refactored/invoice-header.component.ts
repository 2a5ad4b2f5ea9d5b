import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-invoice-header', template: `<p>{{ title }}</p>` })
export class InvoiceHeaderComponent { title = 'Invoice header'; }
