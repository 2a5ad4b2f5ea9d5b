import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-booking-header', template: `<p>{{ title }}</p>` })
export class BookingHeaderComponent { title = 'Booking header'; }
