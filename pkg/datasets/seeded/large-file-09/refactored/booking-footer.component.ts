import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-booking-footer', template: `<p>{{ title }}</p>` })
export class BookingFooterComponent { title = 'Booking footer'; }
